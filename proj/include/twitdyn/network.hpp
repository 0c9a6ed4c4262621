#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace twitdyn {

using UserId = std::uint32_t;
using ExternalId = std::uint64_t;

/// Which user of an edge-list line "a b" is the follower.
enum class EdgeDirection {
    first_follows_second, ///< "a b": a follows b (b is a leader of a)
    second_follows_first, ///< "a b": b follows a
};

/// Immutable directed leader/follower graph.
///
/// Users are dense ids 0..N-1. Leader lists are stored in CSR form, sorted
/// and free of duplicates and self-loops. Follower counts, the maxima over
/// users, and each user's mean leader influence are cached at construction.
class FollowNetwork {
  public:
    /// Builds from (follower, leader) pairs over dense ids < user_count.
    /// Duplicate pairs are collapsed and self-loops dropped.
    /// `external_ids` maps each dense id to the id used in source files;
    /// empty means identity.
    static FollowNetwork from_edges(std::size_t user_count,
                                    std::vector<std::pair<UserId, UserId>> follower_leader,
                                    std::vector<ExternalId> external_ids = {});

    std::size_t user_count() const noexcept { return follower_count_.size(); }
    std::size_t edge_count() const noexcept { return leader_ids_.size(); }

    std::span<const UserId> leaders(UserId user) const noexcept {
        return {leader_ids_.data() + leader_offsets_[user],
                leader_ids_.data() + leader_offsets_[user + 1]};
    }
    std::int64_t leader_count(UserId user) const noexcept {
        return static_cast<std::int64_t>(leader_offsets_[user + 1] - leader_offsets_[user]);
    }
    std::int64_t follower_count(UserId user) const noexcept { return follower_count_[user]; }
    bool is_leader_of(UserId user, UserId candidate) const noexcept;

    std::int64_t f_max() const noexcept { return f_max_; }
    std::int64_t l_max() const noexcept { return l_max_; }

    /// Mean follower count of the user's leaders; 0 for leaderless users.
    double influence(UserId user) const noexcept { return influence_[user]; }
    std::span<const double> influences() const noexcept { return influence_; }

    ExternalId external_id(UserId user) const noexcept { return external_ids_[user]; }

  private:
    FollowNetwork() = default;

    std::vector<std::size_t> leader_offsets_;
    std::vector<UserId> leader_ids_;
    std::vector<std::int64_t> follower_count_;
    std::vector<double> influence_;
    std::vector<ExternalId> external_ids_;
    std::int64_t f_max_ = 0;
    std::int64_t l_max_ = 0;
};

struct NetworkStats {
    std::int64_t nodes = 0;
    std::int64_t edges = 0;
    std::int64_t f_max = 0;
    std::int64_t l_max = 0;
    double mean_out_degree = 0.0;

    bool operator==(const NetworkStats&) const = default;
};

/// Reads a SNAP-style edge list: one whitespace-separated id pair per line,
/// '#' starts a comment line, blank lines ignored. Ids are compacted to
/// 0..N-1 in order of first appearance.
/// Throws ParseError (malformed line) or DomainError (no nodes).
FollowNetwork load_edge_list(std::istream& source,
                             EdgeDirection direction = EdgeDirection::first_follows_second);
FollowNetwork load_edge_list_file(const std::string& path,
                                  EdgeDirection direction = EdgeDirection::first_follows_second);

NetworkStats network_stats(const FollowNetwork& net);

/// {"nodes", "edges", "f_max", "l_max", "mean_out_degree"} in that order.
std::string to_json(const NetworkStats& stats);

enum class SyntheticKind { star, uniform_random };

SyntheticKind parse_synthetic_kind(const std::string& name);

/// star: users 1..n-1 each follow user 0 (`edge_prob` ignored).
/// uniform_random: each ordered pair (i, j), i != j, is an edge with
/// probability `edge_prob`, drawn from a xoshiro256** stream seeded by `seed`.
FollowNetwork generate_synthetic(SyntheticKind kind, std::size_t n, double edge_prob,
                                 std::uint64_t seed);

/// Writes "follower leader" lines using external ids, preceded by a
/// '#' comment header with the node and edge counts.
void write_edge_list(std::ostream& out, const FollowNetwork& net);

} // namespace twitdyn
