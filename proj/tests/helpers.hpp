#pragma once

#include "twitdyn/network.hpp"

#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace twitdyn::test {

inline FollowNetwork from_text(const std::string& text,
                               EdgeDirection dir = EdgeDirection::first_follows_second) {
    std::istringstream in(text);
    return load_edge_list(in, dir);
}

inline std::string data_path(const std::string& name) { return std::string(TWITDYN_TEST_DATA) + "/" + name; }

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Mean degree ~20 random network used throughout the engine and fitter tests.
inline FollowNetwork random_network(std::size_t n, double mean_degree, std::uint64_t seed) {
    return generate_synthetic(SyntheticKind::uniform_random, n,
                              mean_degree / static_cast<double>(n - 1), seed);
}

} // namespace twitdyn::test
