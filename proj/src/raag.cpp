#include "raagobs/raag.hpp"

#include <algorithm>
#include <sstream>

#include "raagobs/errors.hpp"

namespace raagobs {

RaagWord::RaagWord(std::shared_ptr<const Graph> ambient, std::vector<Syllable> syllables)
    : ambient_(std::move(ambient)), syllables_(std::move(syllables)) {
    if (!ambient_) throw Error("word without an ambient graph");
    std::erase_if(syllables_, [](const Syllable& s) { return s.exponent == 0; });
    for (const auto& s : syllables_)
        if (s.vertex >= ambient_->order())
            throw GraphError("word uses vertex " + std::to_string(s.vertex) + " outside the ambient graph");
}

RaagWord RaagWord::generator(std::shared_ptr<const Graph> ambient, Vertex v, Exponent k) {
    return RaagWord(std::move(ambient), {Syllable{v, std::move(k)}});
}

RaagWord RaagWord::inverse() const {
    std::vector<Syllable> s;
    s.reserve(syllables_.size());
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) s.push_back({it->vertex, -it->exponent});
    return RaagWord(ambient_, std::move(s));
}

RaagWord RaagWord::power(const Exponent& k) const {
    RaagWord base = k < 0 ? normal_form(inverse()) : normal_form(*this);
    Exponent e = k < 0 ? Exponent(-k) : k;
    RaagWord result(ambient_);
    while (e > 0) {
        if ((e & 1) != 0) result = normal_form(result * base);
        e >>= 1;
        if (e > 0) base = normal_form(base * base);
    }
    return result;
}

RaagWord operator*(const RaagWord& a, const RaagWord& b) {
    if (a.ambient_ != b.ambient_ && !(*a.ambient_ == *b.ambient_))
        throw Error("cannot multiply words over different graphs");
    std::vector<Syllable> s = a.syllables_;
    s.insert(s.end(), b.syllables_.begin(), b.syllables_.end());
    return RaagWord(a.ambient_, std::move(s));
}

namespace {

// Appends one syllable to a reduced word, keeping it reduced: it merges into
// the nearest same-vertex syllable it can commute back to.
void push_reduced(const Graph& g, std::vector<Syllable>& word, Syllable s) {
    for (std::size_t i = word.size(); i-- > 0;) {
        if (word[i].vertex == s.vertex) {
            word[i].exponent += s.exponent;
            if (word[i].exponent == 0) word.erase(word.begin() + static_cast<std::ptrdiff_t>(i));
            return;
        }
        if (!g.adjacent(word[i].vertex, s.vertex)) break;
    }
    word.push_back(std::move(s));
}

}  // namespace

RaagWord normal_form(const RaagWord& w) {
    const Graph& g = w.ambient();
    std::vector<Syllable> reduced;
    for (const auto& s : w.syllables()) push_reduced(g, reduced, s);

    // Lexicographically least linear extension of the commutation order.
    std::vector<Syllable> out;
    out.reserve(reduced.size());
    std::vector<bool> taken(reduced.size(), false);
    for (std::size_t step = 0; step < reduced.size(); ++step) {
        std::size_t pick = reduced.size();
        for (std::size_t j = 0; j < reduced.size(); ++j) {
            if (taken[j]) continue;
            bool free = true;
            for (std::size_t i = 0; i < j && free; ++i)
                if (!taken[i] && !g.adjacent(reduced[i].vertex, reduced[j].vertex)) free = false;
            if (free && (pick == reduced.size() || reduced[j].vertex < reduced[pick].vertex)) pick = j;
        }
        taken[pick] = true;
        out.push_back(reduced[pick]);
    }
    return RaagWord(w.ambient_ptr(), std::move(out));
}

std::vector<Vertex> support(const RaagWord& w) {
    std::vector<Vertex> s;
    const auto nf = normal_form(w);
    for (const auto& syl : nf.syllables()) s.push_back(syl.vertex);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

Exponent exponent_mass(const RaagWord& w) {
    Exponent total = 0;
    for (const auto& s : w.syllables()) total += abs(s.exponent);
    return total;
}

bool same_element(const RaagWord& a, const RaagWord& b) { return normal_form(a * b.inverse()).empty(); }

bool commutes(const RaagWord& a, const RaagWord& b) {
    return normal_form(a * b * a.inverse() * b.inverse()).empty();
}

RaagWord parse_word(std::shared_ptr<const Graph> ambient, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<Syllable> syllables;
    std::string token;
    while (in >> token) {
        if (token == "1" && syllables.empty() && !ambient->find_label("1")) continue;
        auto caret = token.rfind('^');
        std::string name = caret == std::string::npos ? token : token.substr(0, caret);
        auto v = ambient->find_label(name);
        if (!v) throw ParseError("word: unknown generator \"" + name + "\"");
        Exponent k = 1;
        if (caret != std::string::npos) {
            std::string digits = token.substr(caret + 1);
            std::string_view body = digits;
            if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
            if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw ParseError("word: malformed exponent in \"" + token + "\"");
            if (digits.front() == '+') digits.erase(0, 1);
            k = Exponent(digits);
        }
        if (k == 0) throw ParseError("word: zero exponent in \"" + token + "\"");
        syllables.push_back({*v, std::move(k)});
    }
    return RaagWord(std::move(ambient), std::move(syllables));
}

std::string to_string(const RaagWord& w) {
    std::string out;
    for (const auto& s : w.syllables()) {
        if (!out.empty()) out += ' ';
        out += w.ambient().label(s.vertex) + "^" + s.exponent.str();
    }
    return out;
}

}  // namespace raagobs
