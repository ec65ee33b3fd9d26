#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "freeze/grid.hpp"
#include "freeze/selfmap.hpp"

namespace freeze {

struct SearchLimits {
    uint64_t node_cap = 200'000'000;
    double time_cap_s = 0;   // 0 = no cap
    bool pulling = true;     // coordinate pulling + unique-geodesic seeding
};

struct SearchStats {
    uint64_t nodes = 0;
    uint64_t propagations = 0;  // domain deletions
    double wall_s = 0;

    SearchStats& operator+=(const SearchStats& o) {
        nodes += o.nodes;
        propagations += o.propagations;
        wall_s += o.wall_s;
        return *this;
    }
};

// The finite constraint problem behind "is there a continuous self-map
// fixing A?": one domain of candidate targets per point. Domains only
// shrink; pinned points hold singleton {self} domains.
struct RigidityProblem {
    std::shared_ptr<const Graph> graph;
    std::vector<Bits> domains;

    static RigidityProblem make(std::shared_ptr<const Graph> g);
    // pin x into Fix(f); false on contradiction (domain already excludes self)
    bool pin(int index);
    bool contradiction() const;
};

// Arc-consistency closure plus (optionally) the coordinate pulling rule:
// a candidate target is deleted when an adjacent point's domain cannot
// support it. Returns false on contradiction; counts deletions into stats.
bool propagate(RigidityProblem& problem, bool pulling, SearchStats& stats);

enum class Verdict { Freezing, NotFreezing, Undecided };

std::string verdict_name(Verdict v);

struct WitnessResult {
    std::optional<SelfMap> witness;  // non-identity continuous map fixing the pinned set
    bool undecided = false;          // resource cap hit before the search completed
    SearchStats stats;
};

// Complete search for a non-identity continuous self-map fixing A pointwise.
// Absence (with undecided == false) proves A is a freezing set.
// Deterministic: first witness under canonical variable/value order.
WitnessResult find_witness(const Image& X, const Adjacency& adj, const std::vector<Point>& A,
                           const SearchLimits& limits = {});

struct FreezingReport {
    std::vector<Point> candidate;
    Adjacency adjacency;
    Verdict verdict = Verdict::Undecided;
    std::optional<SelfMap> witness;  // when not freezing

    struct PointCheck {
        Point removed;
        Verdict verdict = Verdict::Undecided;      // verdict for A \ {removed} as a freezing set
        std::optional<SelfMap> witness;            // map fixing A \ {removed}, moving something
    };
    bool minimality_checked = false;
    std::optional<bool> minimal;                   // set when decidable
    std::optional<Point> removable;                // witnessing non-minimality
    std::vector<PointCheck> point_checks;
    SearchStats stats;

    std::string text() const;  // deterministic multi-line report (no wall times)
};

FreezingReport is_freezing_set(const Image& X, const Adjacency& adj, const std::vector<Point>& A,
                               const SearchLimits& limits = {});

// Freezing verdict plus, per point p of A, a witness for A \ {p}.
FreezingReport is_minimal_freezing_set(const Image& X, const Adjacency& adj,
                                       const std::vector<Point>& A,
                                       const SearchLimits& limits = {});

// Exhaustive subset search for ground truth on tiny images: all freezing
// sets of minimum cardinality (<= cap). Refuses #X > 20 unless overridden.
std::vector<std::vector<Point>> minimum_freezing_sets(const Image& X, const Adjacency& adj,
                                                      int cap, bool override_size_guard = false,
                                                      const SearchLimits& limits = {});

}  // namespace freeze
