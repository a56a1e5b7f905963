#include "snc/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <iterator>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "snc/conjectures.hpp"
#include "snc/errors.hpp"

namespace snc {

const char* enum_mode_name(EnumMode m) {
    switch (m) {
        case EnumMode::All: return "all";
        case EnumMode::Tournaments: return "tournaments";
        case EnumMode::Random: return "random";
    }
    return "?";
}

std::optional<EnumMode> enum_mode_from_name(const std::string& name) {
    if (name == "all") return EnumMode::All;
    if (name == "tournaments") return EnumMode::Tournaments;
    if (name == "random") return EnumMode::Random;
    return std::nullopt;
}

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
}

std::uint64_t child_seed(std::uint64_t seed, std::uint64_t i) {
    return mix64(seed + (i + 1) * 0x9E3779B97F4A7C15ull);
}

DigraphStream::DigraphStream(int n, EnumMode mode) : n_(n), mode_(mode) {
    base_ = mode == EnumMode::Tournaments ? 2 : 3;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) pairs_.emplace_back(u, v);
    size_ = 1;
    for (std::size_t t = 0; t < pairs_.size(); ++t) size_ *= base_;
}

DigraphStream DigraphStream::all(int n, int cap) {
    if (n < 1) throw EmptyDigraph("enumerate_digraphs needs n >= 1");
    if (n > cap)
        throw SizeCapExceeded("enumerate_digraphs: n=" + std::to_string(n) + " exceeds cap " +
                              std::to_string(cap));
    return DigraphStream(n, EnumMode::All);
}

DigraphStream DigraphStream::tournaments(int n, int cap) {
    if (n < 1) throw EmptyDigraph("enumerate_tournaments needs n >= 1");
    if (n > cap)
        throw SizeCapExceeded("enumerate_tournaments: n=" + std::to_string(n) + " exceeds cap " +
                              std::to_string(cap));
    return DigraphStream(n, EnumMode::Tournaments);
}

DigraphStream enumerate_digraphs(int n, int cap) { return DigraphStream::all(n, cap); }
DigraphStream enumerate_tournaments(int n, int cap) { return DigraphStream::tournaments(n, cap); }

Digraph DigraphStream::at(std::uint64_t index) const {
    if (index >= size_)
        throw std::out_of_range("DigraphStream index " + std::to_string(index) + " out of " +
                                std::to_string(size_));
    std::vector<Arc> arcs;
    std::uint64_t place = size_;
    std::uint64_t rest = index;
    for (const auto& [u, v] : pairs_) {
        place /= base_;
        const int state = static_cast<int>(rest / place);
        rest %= place;
        if (mode_ == EnumMode::Tournaments) {
            arcs.push_back(state == 0 ? Arc{u, v} : Arc{v, u});
        } else if (state == 1) {
            arcs.push_back({u, v});
        } else if (state == 2) {
            arcs.push_back({v, u});
        }
    }
    return build_digraph(n_, arcs);
}

Digraph random_digraph(int n, const Rational& p_forward, const Rational& p_backward,
                       std::uint64_t seed) {
    if (n < 1) throw EmptyDigraph("random_digraph needs n >= 1");
    if (p_forward.sign() < 0 || p_backward.sign() < 0 ||
        p_forward + p_backward > Rational(1))
        throw InvalidProbability(
            "random_digraph needs p_forward, p_backward >= 0 with p_forward + p_backward <= 1");
    const Rational either = p_forward + p_backward;
    SplitMix64 gen(seed);
    std::vector<Arc> arcs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            const Rational x = Rational::from_u64_over_2_64(gen.next());
            if (x < p_forward)
                arcs.push_back({u, v});
            else if (x < either)
                arcs.push_back({v, u});
        }
    return build_digraph(n, arcs);
}

Digraph canonicalize(const Digraph& d, int cap) {
    const int n = d.vertex_count();
    if (n > cap)
        throw SizeCapExceeded("canonicalize: n=" + std::to_string(n) + " exceeds cap " +
                              std::to_string(cap));
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::vector<Arc> best = d.arcs();
    std::vector<Arc> relabeled;
    relabeled.reserve(best.size());
    do {
        relabeled.clear();
        for (const Arc& a : d.arcs()) relabeled.push_back({perm[a.tail - 1], perm[a.head - 1]});
        std::sort(relabeled.begin(), relabeled.end());
        if (relabeled < best) best = relabeled;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return build_digraph(n, best);
}

bool SearchReport::clean() const {
    if (violation_count != 0) return false;
    for (const auto& list : counterexamples)
        if (!list.empty()) return false;
    return true;
}

std::string checkpoint_to_string(const Checkpoint& c) {
    std::ostringstream os;
    os << enum_mode_name(c.mode) << ' ' << c.n << ' ' << c.next_index << ' '
       << c.violations_so_far;
    return os.str();
}

Checkpoint checkpoint_from_string(const std::string& text) {
    std::istringstream is(text);
    std::string mode_word;
    Checkpoint c;
    if (!(is >> mode_word >> c.n >> c.next_index >> c.violations_so_far))
        throw ParseError("malformed checkpoint (want: mode n next_index violations)", 1, 1);
    const auto mode = enum_mode_from_name(mode_word);
    if (!mode) throw ParseError("unknown checkpoint mode '" + mode_word + "'", 1, 1);
    c.mode = *mode;
    return c;
}

std::string instance_label(const EnumSpec& spec, std::uint64_t index) {
    return std::string(enum_mode_name(spec.mode)) + ":" + std::to_string(spec.n) + ":" +
           std::to_string(index);
}

namespace {

struct ChunkAgg {
    std::uint64_t examined = 0;
    std::uint64_t checked = 0;
    std::array<std::vector<std::uint64_t>, 6> fails;
    std::vector<std::pair<std::uint64_t, std::vector<std::string>>> violations;
};

ChunkAgg process_range(const EnumSpec& spec, const DigraphStream* stream, std::uint64_t lo,
                       std::uint64_t hi) {
    ChunkAgg agg;
    for (std::uint64_t i = lo; i < hi; ++i) {
        Digraph d = stream ? stream->at(i)
                           : random_digraph(spec.n, spec.p_forward, spec.p_backward,
                                            child_seed(spec.seed, i));
        ++agg.examined;
        if (spec.dedup && canonicalize(d) != d) continue;
        if (spec.prune && !kl_prune(d)) continue;
        ++agg.checked;
        CrossCheckReport rep = consistency_check(d, instance_label(spec, i));
        for (int c = 0; c < 6; ++c)
            if (!rep.verdicts[c].satisfied()) agg.fails[c].push_back(i);
        if (!rep.violations.empty()) agg.violations.emplace_back(i, rep.violations);
    }
    return agg;
}

}  // namespace

SearchReport sweep(const EnumSpec& spec, int threads, const std::string& checkpoint_path,
                   const ProgressFn& progress) {
    if (spec.n < 1) throw std::invalid_argument("sweep: n must be >= 1");
    if (spec.mode == EnumMode::Random && spec.sample_count < 1)
        throw std::invalid_argument("sweep: random mode needs sample_count >= 1");
    const auto t0 = std::chrono::steady_clock::now();

    std::optional<DigraphStream> stream;
    std::uint64_t total = 0;
    if (spec.mode == EnumMode::All) {
        stream =
            DigraphStream::all(spec.n, spec.cap_override > 0 ? spec.cap_override : kAllDigraphsCap);
        total = stream->size();
    } else if (spec.mode == EnumMode::Tournaments) {
        stream = DigraphStream::tournaments(
            spec.n, spec.cap_override > 0 ? spec.cap_override : kTournamentsCap);
        total = stream->size();
    } else {
        total = spec.sample_count;
    }

    SearchReport report;
    report.spec = spec;
    if (!checkpoint_path.empty()) {
        std::ifstream in(checkpoint_path);
        if (in) {
            std::string text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            Checkpoint c = checkpoint_from_string(text);
            if (c.mode != spec.mode || c.n != spec.n)
                throw std::invalid_argument("checkpoint does not match the requested sweep (have " +
                                            checkpoint_to_string(c) + ")");
            report.start_index = std::min(c.next_index, total);
            report.violation_count = c.violations_so_far;
        }
    }

    const std::uint64_t start = report.start_index;
    constexpr std::uint64_t kChunk = 512;
    const std::uint64_t nchunks = start >= total ? 0 : (total - start + kChunk - 1) / kChunk;
    const DigraphStream* stream_ptr = stream ? &*stream : nullptr;

    auto chunk_bounds = [&](std::uint64_t c) {
        const std::uint64_t lo = start + c * kChunk;
        return std::pair<std::uint64_t, std::uint64_t>{lo, std::min(lo + kChunk, total)};
    };
    auto merge_chunk = [&](ChunkAgg&& agg, std::uint64_t chunk_end) {
        report.enumerated += agg.examined;
        report.checked += agg.checked;
        for (int c = 0; c < 6; ++c)
            report.counterexamples[c].insert(report.counterexamples[c].end(),
                                             agg.fails[c].begin(), agg.fails[c].end());
        report.violation_count += agg.violations.size();
        for (auto& v : agg.violations) report.violations.push_back(std::move(v));
        if (!checkpoint_path.empty()) {
            std::ofstream out(checkpoint_path, std::ios::trunc);
            out << checkpoint_to_string({spec.mode, spec.n, chunk_end, report.violation_count})
                << '\n';
        }
        if (progress) progress(chunk_end - start, total - start);
    };

    if (threads <= 1 || nchunks <= 1) {
        for (std::uint64_t c = 0; c < nchunks; ++c) {
            auto [lo, hi] = chunk_bounds(c);
            merge_chunk(process_range(spec, stream_ptr, lo, hi), hi);
        }
    } else {
        // Workers claim chunks dynamically; the merger consumes them strictly
        // in chunk order, so the report is identical for every thread count.
        struct Slot {
            bool done = false;
            ChunkAgg agg;
        };
        std::vector<Slot> results(nchunks);
        std::mutex mu;
        std::condition_variable cv;
        std::atomic<std::uint64_t> next{0};
        std::exception_ptr err;

        auto worker = [&] {
            for (;;) {
                const std::uint64_t c = next.fetch_add(1);
                if (c >= nchunks) return;
                auto [lo, hi] = chunk_bounds(c);
                try {
                    ChunkAgg agg = process_range(spec, stream_ptr, lo, hi);
                    std::lock_guard lk(mu);
                    results[c].agg = std::move(agg);
                    results[c].done = true;
                } catch (...) {
                    std::lock_guard lk(mu);
                    if (!err) err = std::current_exception();
                    results[c].done = true;
                }
                cv.notify_all();
            }
        };
        const int nworkers =
            static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), nchunks));
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        for (int t = 0; t < nworkers; ++t) pool.emplace_back(worker);

        for (std::uint64_t c = 0; c < nchunks; ++c) {
            std::unique_lock lk(mu);
            cv.wait(lk, [&] { return results[c].done || err != nullptr; });
            if (err) break;
            ChunkAgg agg = std::move(results[c].agg);
            lk.unlock();
            merge_chunk(std::move(agg), chunk_bounds(c).second);
        }
        for (auto& th : pool) th.join();
        if (err) std::rethrow_exception(err);
    }

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace snc
