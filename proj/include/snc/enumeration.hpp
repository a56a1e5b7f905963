#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "snc/digraph.hpp"
#include "snc/rational.hpp"

namespace snc {

enum class EnumMode { All, Tournaments, Random };

const char* enum_mode_name(EnumMode m);
std::optional<EnumMode> enum_mode_from_name(const std::string& name);

/// splitmix64 finalizer: the single mixing function behind every seeded
/// draw in the toolkit, so all randomness is documented and replayable.
std::uint64_t mix64(std::uint64_t z);

/// Deterministic counter-based generator (splitmix64).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();

private:
    std::uint64_t state_;
};

/// Seed of the i-th child stream: instances of a seeded batch draw from
/// independent child generators, so instance i is addressable without
/// replaying instances 0..i-1.
std::uint64_t child_seed(std::uint64_t seed, std::uint64_t i);

inline constexpr int kAllDigraphsCap = 6;
inline constexpr int kTournamentsCap = 7;
inline constexpr int kCanonicalizeCap = 8;

/// Index-addressable exhaustive stream over the labeled digraphs (or
/// tournaments) on n vertices. Instance `index` encodes the states of the
/// unordered pairs (1,2),(1,3),...,(n-1,n) as base-3 (or base-2) digits,
/// most significant digit first, so iteration by index is lexicographic in
/// the pair-state sequence. States: 0 = no arc, 1 = low->high arc,
/// 2 = high->low arc (tournaments use 0 = low->high, 1 = high->low).
class DigraphStream {
public:
    static DigraphStream all(int n, int cap = kAllDigraphsCap);
    static DigraphStream tournaments(int n, int cap = kTournamentsCap);

    std::uint64_t size() const { return size_; }
    int vertex_count() const { return n_; }
    EnumMode mode() const { return mode_; }

    Digraph at(std::uint64_t index) const;

private:
    DigraphStream(int n, EnumMode mode);

    int n_ = 1;
    EnumMode mode_ = EnumMode::All;
    int base_ = 3;
    std::vector<std::pair<int, int>> pairs_;  // (u,v), u < v, lexicographic
    std::uint64_t size_ = 1;
};

DigraphStream enumerate_digraphs(int n, int cap = kAllDigraphsCap);
DigraphStream enumerate_tournaments(int n, int cap = kTournamentsCap);

/// Each unordered pair is independently low->high with probability
/// p_forward, high->low with p_backward, absent otherwise — draws come from
/// SplitMix64(seed) in pair order, compared exactly as r/2^64 against the
/// probabilities. No digon can arise by construction.
Digraph random_digraph(int n, const Rational& p_forward, const Rational& p_backward,
                       std::uint64_t seed);

/// Lexicographically least sorted arc list over all n! relabelings.
/// Idempotent; isomorphic inputs map to the same output. Brute force, so
/// capped at small n.
Digraph canonicalize(const Digraph& d, int cap = kCanonicalizeCap);

struct EnumSpec {
    int n = 1;
    EnumMode mode = EnumMode::All;
    std::uint64_t sample_count = 1;  // random mode only
    std::uint64_t seed = 0;          // random mode only
    Rational p_forward{1, 3};        // random mode pair probabilities
    Rational p_backward{1, 3};
    bool dedup = false;  // keep only canonical representatives
    bool prune = false;  // keep only instances passing kl_prune
    int cap_override = 0;  // 0 = default cap for the mode
};

struct SearchReport {
    EnumSpec spec;
    std::uint64_t start_index = 0;  // first stream index of this run
    std::uint64_t enumerated = 0;   // stream positions visited this run
    std::uint64_t checked = 0;      // instances surviving dedup/prune
    /// Stream indices whose verdict was Fails, per ConjectureId (C1..C6).
    std::array<std::vector<std::uint64_t>, 6> counterexamples;
    /// (stream index, violated relation names) for inconsistent instances.
    std::vector<std::pair<std::uint64_t, std::vector<std::string>>> violations;
    /// Cumulative violating-instance count, including any resumed-from prior.
    std::uint64_t violation_count = 0;
    double wall_seconds = 0.0;  // diagnostics only; never serialized

    bool clean() const;  // no counterexamples and no violations
};

struct Checkpoint {
    EnumMode mode = EnumMode::All;
    int n = 1;
    std::uint64_t next_index = 0;
    std::uint64_t violations_so_far = 0;
};

/// Plain-text round trip: "mode n next_index violations_so_far".
std::string checkpoint_to_string(const Checkpoint& c);
Checkpoint checkpoint_from_string(const std::string& text);

/// Called after each in-order merged block with (instances done, total).
using ProgressFn = std::function<void(std::uint64_t, std::uint64_t)>;

/// Runs consistency_check over the instance stream. The index space is cut
/// into fixed chunks which workers claim dynamically; results merge in
/// chunk order, so the report (and any output derived from it) is identical
/// for every thread count. With a checkpoint path, progress is persisted
/// after each merged chunk and a matching existing checkpoint resumes the
/// run at its recorded index.
SearchReport sweep(const EnumSpec& spec, int threads = 1,
                   const std::string& checkpoint_path = std::string(),
                   const ProgressFn& progress = nullptr);

/// "mode:n:index" label used for instances in reports.
std::string instance_label(const EnumSpec& spec, std::uint64_t index);

}  // namespace snc
