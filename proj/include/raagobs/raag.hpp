#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "raagobs/graph.hpp"

namespace raagobs {

/// Arbitrary precision so repeated exponent products never overflow.
using Exponent = boost::multiprecision::cpp_int;

struct Syllable {
    Vertex vertex = 0;
    Exponent exponent;

    friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A word in the right-angled Artin group A(ambient): a sequence of
/// syllables v^k with k != 0. Generators u, v commute iff u ~ v.
class RaagWord {
public:
    explicit RaagWord(std::shared_ptr<const Graph> ambient, std::vector<Syllable> syllables = {});

    static RaagWord generator(std::shared_ptr<const Graph> ambient, Vertex v, Exponent k = 1);

    const Graph& ambient() const noexcept { return *ambient_; }
    const std::shared_ptr<const Graph>& ambient_ptr() const noexcept { return ambient_; }
    const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
    bool empty() const noexcept { return syllables_.empty(); }

    RaagWord inverse() const;
    /// Normal form of w^k.
    RaagWord power(const Exponent& k) const;

    friend RaagWord operator*(const RaagWord& a, const RaagWord& b);
    /// Syllable-wise equality of the words as written.
    friend bool operator==(const RaagWord& a, const RaagWord& b) { return a.syllables_ == b.syllables_; }

private:
    std::shared_ptr<const Graph> ambient_;
    std::vector<Syllable> syllables_;
};

/// Reduced word with canonical syllable order.
///
/// A word is reduced when no two syllables on the same vertex are separated
/// only by syllables that commute with it. Reduced words for one element
/// differ by shuffles, so listing syllables as the lexicographically least
/// linear extension (smallest vertex first among those free to move left)
/// makes the result unique per group element.
RaagWord normal_form(const RaagWord& w);

/// Vertices occurring in the normal form, ascending.
std::vector<Vertex> support(const RaagWord& w);

/// Total |exponent| mass of the word as written.
Exponent exponent_mass(const RaagWord& w);

bool same_element(const RaagWord& a, const RaagWord& b);

/// True iff the commutator a b a^-1 b^-1 is trivial. Throws Error when the
/// words live over different graphs.
bool commutes(const RaagWord& a, const RaagWord& b);

/// "a^1 b^-2" with names from the ambient graph's labels (or decimal ids).
/// A bare name means exponent 1; an empty string or "1" is the identity.
RaagWord parse_word(std::shared_ptr<const Graph> ambient, std::string_view text);
std::string to_string(const RaagWord& w);

}  // namespace raagobs
