#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/config.hpp"
#include "ramsey/stats.hpp"

namespace ramsey {

enum class TrialOutcome {
    ArrowFailsCertified,  // exact search produced an avoiding colouring
    AvoidingFound,        // a strategy produced a verified avoiding colouring
    NoAvoidingFound,      // nothing decisive either way
    ArrowHoldsCertified,  // exact search exhausted every colouring
    Unknown,              // error or budget exhaustion
};

const char* outcome_name(TrialOutcome o);
std::optional<TrialOutcome> outcome_from_name(const std::string& s);

// One grid point of a sweep.
struct SweepPoint {
    std::size_t point_index = 0;
    std::size_t p_index = 0, t_index = 0;
    double p = 0.0;
    std::size_t t = 0;
    std::size_t big_n = 0;
};

struct TrialRecord {
    std::size_t point_index = 0;
    std::size_t trial_index = 0;
    std::size_t r = 0, n = 0, big_n = 0;
    double p = 0.0;
    std::size_t t = 0;
    std::uint64_t seed = 0; // derived stream id
    std::string strategy;   // decisive strategy, or "none"
    TrialOutcome outcome = TrialOutcome::Unknown;
    std::string witness; // short comma-free summary
    std::uint64_t work = 0; // deterministic cost units (search nodes)

    bool operator==(const TrialRecord&) const = default;
};

struct SweepCurvePoint {
    double value = 0.0; // the swept parameter
    double fraction = 0.0;
    WilsonInterval ci;
    std::size_t trials = 0;
};

struct SweepCurve {
    std::string axis; // "p" or "t"
    std::vector<SweepCurvePoint> points;
};

// Arrow-positive evidence: no avoiding colouring was found (possibly
// certified). This is the success event sweep curves aggregate.
bool arrow_positive(TrialOutcome o);

std::vector<SweepPoint> plan_points(const ExperimentConfig& cfg);

// Derived stream for (point, trial); in coupled mode the stream ignores the
// p-index so all p-points of a trial share per-pair uniforms.
std::uint64_t derive_stream(const ExperimentConfig& cfg, const SweepPoint& point,
                            std::size_t trial_index);

// Runs the configured strategies/checkers on one sampled graph and records
// the first decisive outcome. Exceptions become Unknown records.
TrialRecord run_trial(const ExperimentConfig& cfg, const SweepPoint& point,
                      std::size_t trial_index);

struct SweepResult {
    std::vector<TrialRecord> records; // sorted by (point_index, trial_index)
    SweepCurve curve;
};

// Executes all (point, trial) pairs with `workers` threads, consulting and
// feeding the results cache, then writes records.csv and curve.svg under
// out_dir. Aggregation is order-independent; a rerun with any worker count
// reproduces records.csv byte for byte.
SweepResult run_sweep(const ExperimentConfig& cfg, const std::string& out_dir,
                      std::size_t workers = 1);

// CSV schema (header exact):
// point_index,trial_index,r,n,N,p,t,seed,strategy,outcome,witness,elapsed_ms
void emit_csv(const std::vector<TrialRecord>& records, std::ostream& out);
void emit_csv_file(const std::vector<TrialRecord>& records, const std::string& path);
std::vector<TrialRecord> parse_csv(std::istream& in, const std::string& context = "<csv>");
std::vector<TrialRecord> parse_csv_file(const std::string& path);

SweepCurve aggregate_curve(const std::vector<TrialRecord>& records, const std::string& axis);

// Single-polyline chart with CI whiskers and labelled axes.
void emit_svg(const SweepCurve& curve, const std::string& path);

} // namespace ramsey
