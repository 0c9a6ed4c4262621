#include "twitdyn/network.hpp"

#include "twitdyn/errors.hpp"
#include "twitdyn/rng.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include <json.hpp>

namespace twitdyn {

FollowNetwork FollowNetwork::from_edges(std::size_t user_count,
                                        std::vector<std::pair<UserId, UserId>> follower_leader,
                                        std::vector<ExternalId> external_ids) {
    if (user_count == 0)
        throw DomainError("network has no users");
    if (!external_ids.empty() && external_ids.size() != user_count)
        throw ContractViolation("external id table size differs from user count");
    for (const auto& [follower, leader] : follower_leader)
        if (follower >= user_count || leader >= user_count)
            throw ContractViolation("edge endpoint out of range");

    std::erase_if(follower_leader, [](const auto& e) { return e.first == e.second; });
    std::sort(follower_leader.begin(), follower_leader.end());
    follower_leader.erase(std::unique(follower_leader.begin(), follower_leader.end()),
                          follower_leader.end());

    FollowNetwork net;
    net.leader_offsets_.assign(user_count + 1, 0);
    net.leader_ids_.reserve(follower_leader.size());
    net.follower_count_.assign(user_count, 0);
    for (const auto& [follower, leader] : follower_leader) {
        ++net.leader_offsets_[follower + 1];
        net.leader_ids_.push_back(leader);
        ++net.follower_count_[leader];
    }
    std::partial_sum(net.leader_offsets_.begin(), net.leader_offsets_.end(),
                     net.leader_offsets_.begin());

    if (external_ids.empty()) {
        external_ids.resize(user_count);
        std::iota(external_ids.begin(), external_ids.end(), ExternalId{0});
    }
    net.external_ids_ = std::move(external_ids);

    net.influence_.assign(user_count, 0.0);
    for (UserId u = 0; u < user_count; ++u) {
        const auto lead = net.leaders(u);
        net.l_max_ = std::max(net.l_max_, static_cast<std::int64_t>(lead.size()));
        net.f_max_ = std::max(net.f_max_, net.follower_count_[u]);
        if (lead.empty())
            continue;
        std::int64_t mass = 0;
        for (UserId j : lead)
            mass += net.follower_count_[j];
        net.influence_[u] = static_cast<double>(mass) / static_cast<double>(lead.size());
    }
    return net;
}

bool FollowNetwork::is_leader_of(UserId user, UserId candidate) const noexcept {
    const auto lead = leaders(user);
    return std::binary_search(lead.begin(), lead.end(), candidate);
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view next_token(std::string_view& rest) {
    std::size_t b = 0;
    while (b < rest.size() && is_space(rest[b]))
        ++b;
    std::size_t e = b;
    while (e < rest.size() && !is_space(rest[e]))
        ++e;
    const auto tok = rest.substr(b, e - b);
    rest.remove_prefix(e);
    return tok;
}

ExternalId parse_id(std::string_view tok, std::size_t line_no) {
    ExternalId value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "expected a nonnegative integer node id, got '" +
                                      std::string(tok) + "'");
    return value;
}

} // namespace

FollowNetwork load_edge_list(std::istream& source, EdgeDirection direction) {
    const std::string text{std::istreambuf_iterator<char>(source), std::istreambuf_iterator<char>()};
    if (source.bad())
        throw IoError("failed reading edge list");

    std::unordered_map<ExternalId, UserId> dense;
    std::vector<ExternalId> external;
    std::vector<std::pair<UserId, UserId>> edges;
    auto intern = [&](ExternalId id) {
        const auto [it, inserted] = dense.try_emplace(id, static_cast<UserId>(external.size()));
        if (inserted)
            external.push_back(id);
        return it->second;
    };

    std::string_view all(text);
    std::size_t line_no = 0;
    while (!all.empty()) {
        const auto eol = all.find('\n');
        std::string_view line = all.substr(0, eol);
        all.remove_prefix(eol == std::string_view::npos ? all.size() : eol + 1);
        ++line_no;

        std::string_view rest = line;
        const auto first = next_token(rest);
        if (first.empty() || first.front() == '#')
            continue;
        const auto second = next_token(rest);
        if (second.empty())
            throw ParseError(line_no, "expected two node ids");
        if (!next_token(rest).empty())
            throw ParseError(line_no, "expected exactly two node ids");

        const UserId a = intern(parse_id(first, line_no));
        const UserId b = intern(parse_id(second, line_no));
        if (direction == EdgeDirection::first_follows_second)
            edges.emplace_back(a, b);
        else
            edges.emplace_back(b, a);
    }
    if (external.empty())
        throw DomainError("edge list contains no nodes");
    const std::size_t n = external.size();
    return FollowNetwork::from_edges(n, std::move(edges), std::move(external));
}

FollowNetwork load_edge_list_file(const std::string& path, EdgeDirection direction) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open edge list '" + path + "'");
    return load_edge_list(in, direction);
}

NetworkStats network_stats(const FollowNetwork& net) {
    NetworkStats s;
    s.nodes = static_cast<std::int64_t>(net.user_count());
    s.edges = static_cast<std::int64_t>(net.edge_count());
    s.f_max = net.f_max();
    s.l_max = net.l_max();
    s.mean_out_degree = static_cast<double>(s.edges) / static_cast<double>(s.nodes);
    return s;
}

std::string to_json(const NetworkStats& stats) {
    nlohmann::ordered_json j;
    j["nodes"] = stats.nodes;
    j["edges"] = stats.edges;
    j["f_max"] = stats.f_max;
    j["l_max"] = stats.l_max;
    j["mean_out_degree"] = stats.mean_out_degree;
    return j.dump();
}

SyntheticKind parse_synthetic_kind(const std::string& name) {
    if (name == "star")
        return SyntheticKind::star;
    if (name == "random" || name == "uniform-random")
        return SyntheticKind::uniform_random;
    throw DomainError("unknown synthetic network kind '" + name + "'");
}

FollowNetwork generate_synthetic(SyntheticKind kind, std::size_t n, double edge_prob,
                                 std::uint64_t seed) {
    if (n == 0)
        throw DomainError("synthetic network needs n >= 1");
    std::vector<std::pair<UserId, UserId>> edges;
    switch (kind) {
    case SyntheticKind::star:
        for (UserId u = 1; u < n; ++u)
            edges.emplace_back(u, 0);
        break;
    case SyntheticKind::uniform_random: {
        if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
            throw DomainError("edge_prob must lie in [0, 1]");
        Xoshiro256ss rng(seed);
        for (UserId i = 0; i < n; ++i)
            for (UserId j = 0; j < n; ++j)
                if (i != j && rng.bernoulli(edge_prob))
                    edges.emplace_back(i, j);
        break;
    }
    default:
        throw DomainError("unknown synthetic network kind");
    }
    return FollowNetwork::from_edges(n, std::move(edges));
}

void write_edge_list(std::ostream& out, const FollowNetwork& net) {
    out << "# follower leader\n"
        << "# nodes: " << net.user_count() << " edges: " << net.edge_count() << '\n';
    for (UserId u = 0; u < net.user_count(); ++u)
        for (UserId leader : net.leaders(u))
            out << net.external_id(u) << ' ' << net.external_id(leader) << '\n';
}

} // namespace twitdyn
