#pragma once

#include <memory>
#include <vector>

#include "oracles.hpp"
#include "raagobs/raag.hpp"

namespace testing {

inline std::shared_ptr<const raagobs::Graph> share(raagobs::Graph g) {
    return std::make_shared<const raagobs::Graph>(std::move(g));
}

inline raagobs::RaagWord to_word(const std::shared_ptr<const raagobs::Graph>& g, const oracle::Letters& w) {
    std::vector<raagobs::Syllable> s;
    for (int x : w) s.push_back({oracle::letter_vertex(x), x > 0 ? 1 : -1});
    return raagobs::RaagWord(g, s);
}

/// Expands syllables into signed letters for the oracle.
inline oracle::Letters to_letters(const raagobs::RaagWord& w) {
    oracle::Letters out;
    for (const auto& s : w.syllables()) {
        const int k = static_cast<int>(s.exponent);
        const int letter = static_cast<int>(s.vertex) + 1;
        for (int i = 0; i < std::abs(k); ++i) out.push_back(k > 0 ? letter : -letter);
    }
    return out;
}

inline raagobs::Graph labelled(std::size_t n, std::vector<raagobs::Edge> edges, std::vector<std::string> labels) {
    return raagobs::build_graph(n, edges, std::move(labels));
}

}  // namespace testing
