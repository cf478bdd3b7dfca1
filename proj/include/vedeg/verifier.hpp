#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "vedeg/enumerate.hpp"
#include "vedeg/graph.hpp"

namespace vedeg {

enum class GraphClass { Trees, Connected };
enum class Engine { FastParallel, FastSerial, Reference };

/// Integer quantities of one graph, used by every claim check. Produced by
/// the bitmask kernel or, for the reference engine, through the public
/// Graph/indices API.
struct EvalRecord {
    std::int64_t m1 = 0, m2 = 0, forgotten = 0;
    std::int64_t s = 0, s_alpha = 0, s_beta = 0, s_mu = 0;
    std::int64_t t_ev = 0, t_ve = 0;  // summed independently
    std::int64_t triangles = 0;
    bool is_tree = false;
    bool lemma41_holds = false;  // ve-degree == sum of neighbor degrees, all vertices

    friend bool operator==(const EvalRecord&, const EvalRecord&) = default;
};

EvalRecord evaluate_fast(const SmallGraph& g);
EvalRecord evaluate_reference(const Graph& g);

inline constexpr int kNumIdentities = 7;
inline constexpr int kNumTracked = 4;
inline constexpr const char* kTrackedNames[kNumTracked] = {"S", "Salpha", "Sbeta", "Smu"};

/// Scan outcome for one identity over one enumerated class.
struct IdentityOutcome {
    std::uint64_t applicable = 0;  // graphs satisfying the hypothesis
    std::uint64_t violations = 0;
    std::uint64_t first_index = std::numeric_limits<std::uint64_t>::max();
    SmallGraph witness{};          // first violating graph by enumeration index
    std::int64_t observed = 0, claimed = 0;

    friend bool operator==(const IdentityOutcome&, const IdentityOutcome&) = default;
};

/// Min/max of one tracked index with lexicographically smallest witnesses.
struct ExtremalEntry {
    std::int64_t min_value = std::numeric_limits<std::int64_t>::max();
    std::int64_t max_value = std::numeric_limits<std::int64_t>::min();
    SmallGraph min_witness{};
    SmallGraph max_witness{};

    friend bool operator==(const ExtremalEntry&, const ExtremalEntry&) = default;
};

/// Complete result of scanning one (class, n). Mergeable: merge is
/// associative and commutative (ties broken deterministically), so the
/// result is independent of how the index space was partitioned.
struct ClassScan {
    GraphClass cls = GraphClass::Trees;
    int n = 0;
    std::uint64_t graphs = 0;
    std::array<IdentityOutcome, kNumIdentities> identities{};
    std::array<ExtremalEntry, kNumTracked> extremal{};

    void merge(const ClassScan& other);

    friend bool operator==(const ClassScan&, const ClassScan&) = default;
};

ClassScan scan_class(GraphClass cls, int n, Engine engine);

struct Counterexample {
    Graph graph;
    std::int64_t observed = 0;
    std::int64_t claimed = 0;
};

struct ExtremalWitness {
    Graph min_graph;
    std::int64_t min_value = 0;
    Graph max_graph;
    std::int64_t max_value = 0;
};

/// One machine-checked claim.
struct VerificationReport {
    std::string id;           // e.g. "Thm4.5-lower"
    std::string statement;
    std::string graph_class;  // "trees", "connected" or "trees+connected"
    int n_lo = 0, n_hi = 0;
    std::uint64_t graphs_checked = 0;
    bool holds = false;
    bool expected_to_hold = true;  // false for printed statements the data contradicts
    std::vector<Counterexample> counterexamples;
    std::optional<ExtremalWitness> extremal;
    std::string note;
};

struct VerifyOptions {
    int n_trees = 9;   // scan labeled trees for n in [2, n_trees]
    int n_graphs = 7;  // scan connected graphs for n in [2, n_graphs]
    Engine engine = Engine::FastParallel;
};

/// Scans shared by the claim evaluators; index [k] holds order k+2.
struct ScanSet {
    std::vector<ClassScan> trees;
    std::vector<ClassScan> connected;
};

ScanSet run_scans(const VerifyOptions& opts);

std::vector<VerificationReport> identity_reports(const ScanSet& scans);
std::vector<VerificationReport> bound_reports(const ScanSet& scans);

/// Everything: identity reports followed by bound reports.
std::vector<VerificationReport> verify_all(const VerifyOptions& opts = {});

/// Identity claims only (spec operation).
std::vector<VerificationReport> verify_identities(int n_max_tree, int n_max_graph,
                                                  Engine engine = Engine::FastParallel);

/// Bound claims for one tracked index name over one class.
std::vector<VerificationReport> verify_bounds(const std::string& index_name, int n_lo, int n_hi,
                                              GraphClass cls, Engine engine = Engine::FastParallel);

/// True iff every report's outcome matches its registry expectation.
bool all_as_expected(const std::vector<VerificationReport>& reports);

void write_reports_text(std::ostream& out, const std::vector<VerificationReport>& reports);
void write_reports_jsonl(std::ostream& out, const std::vector<VerificationReport>& reports);

}  // namespace vedeg
