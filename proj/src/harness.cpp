#include "ramsey/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "ramsey/adversary.hpp"
#include "ramsey/arrow.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/io.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

namespace fs = std::filesystem;
using nlohmann::json;

const char* outcome_name(TrialOutcome o) {
    switch (o) {
        case TrialOutcome::ArrowFailsCertified: return "arrow_fails_certified";
        case TrialOutcome::AvoidingFound: return "avoiding_found";
        case TrialOutcome::NoAvoidingFound: return "no_avoiding_found";
        case TrialOutcome::ArrowHoldsCertified: return "arrow_holds_certified";
        case TrialOutcome::Unknown: return "unknown";
    }
    return "?";
}

std::optional<TrialOutcome> outcome_from_name(const std::string& s) {
    for (TrialOutcome o :
         {TrialOutcome::ArrowFailsCertified, TrialOutcome::AvoidingFound,
          TrialOutcome::NoAvoidingFound, TrialOutcome::ArrowHoldsCertified,
          TrialOutcome::Unknown})
        if (s == outcome_name(o)) return o;
    return std::nullopt;
}

bool arrow_positive(TrialOutcome o) {
    return o == TrialOutcome::NoAvoidingFound || o == TrialOutcome::ArrowHoldsCertified;
}

std::vector<SweepPoint> plan_points(const ExperimentConfig& cfg) {
    std::vector<SweepPoint> points;
    if (cfg.vertex_rule == VertexRule::Scaled) {
        std::size_t big_n = static_cast<std::size_t>(
            std::ceil((1.0 + cfg.epsilon) * static_cast<double>(cfg.r * cfg.n)));
        std::size_t t = big_n - cfg.r * cfg.n;
        for (std::size_t pi = 0; pi < cfg.p_grid.size(); ++pi) {
            SweepPoint pt;
            pt.point_index = points.size();
            pt.p_index = pi;
            pt.t_index = 0;
            pt.p = cfg.p_grid[pi];
            pt.t = t;
            pt.big_n = big_n;
            points.push_back(pt);
        }
        return points;
    }
    for (std::size_t ti = 0; ti < cfg.t_grid.size(); ++ti)
        for (std::size_t pi = 0; pi < cfg.p_grid.size(); ++pi) {
            SweepPoint pt;
            pt.point_index = points.size();
            pt.p_index = pi;
            pt.t_index = ti;
            pt.p = cfg.p_grid[pi];
            pt.t = cfg.t_grid[ti];
            pt.big_n = cfg.r * cfg.n + pt.t;
            points.push_back(pt);
        }
    return points;
}

std::uint64_t derive_stream(const ExperimentConfig& cfg, const SweepPoint& point,
                            std::size_t trial_index) {
    // Coupled sweeps must hand every p-point of a trial the same pair
    // uniforms, so the stream may not depend on the p-index.
    std::uint64_t token = cfg.coupled ? point.t_index : point.point_index;
    return hash_counter(Seed{token, 0x73747265616dULL}, trial_index);
}

namespace {

std::string double_repr(double v) {
    std::ostringstream out;
    out << std::setprecision(17) << v;
    return out.str();
}

// Comma-free, short.
std::string sanitise_witness(std::string s) {
    for (auto& c : s)
        if (c == ',' || c == '\n') c = ';';
    if (s.size() > 80) s.resize(80);
    return s;
}

struct StrategyOutcome {
    bool decisive = false;
    TrialRecord record;
};

std::uint64_t checks_nodes(const std::vector<DetectorCheck>& checks) {
    std::uint64_t total = 0;
    for (const auto& c : checks) total += c.nodes;
    return total;
}

} // namespace

TrialRecord run_trial(const ExperimentConfig& cfg, const SweepPoint& point,
                      std::size_t trial_index) {
    TrialRecord rec;
    rec.point_index = point.point_index;
    rec.trial_index = trial_index;
    rec.r = cfg.r;
    rec.n = cfg.n;
    rec.big_n = point.big_n;
    rec.p = point.p;
    rec.t = point.t;
    rec.seed = derive_stream(cfg, point, trial_index);
    rec.strategy = "none";
    rec.outcome = TrialOutcome::NoAvoidingFound;

    try {
        Seed seed{cfg.master_seed, rec.seed};
        Graph g = sample_gnp(point.big_n, point.p, seed);
        rec.work += g.num_edges();
        VerificationMode mode =
            cfg.verify_exact ? VerificationMode::Exact : VerificationMode::Heuristic;

        bool saw_unknown = false;
        for (const auto& name : cfg.strategies) {
            if (name == "exact") {
                auto verdict = arrow_exact(g, cfg.r, cfg.n, cfg.budget);
                rec.work += verdict.nodes_explored;
                if (verdict.kind == ArrowKind::Holds) {
                    rec.strategy = "exact";
                    rec.outcome = TrialOutcome::ArrowHoldsCertified;
                    return rec;
                }
                if (verdict.kind == ArrowKind::Fails) {
                    rec.strategy = "exact";
                    rec.outcome = TrialOutcome::ArrowFailsCertified;
                    rec.witness = "red_edges=" +
                                  std::to_string(verdict.certificate->red_edge_count());
                    return rec;
                }
                saw_unknown = true;
                continue;
            }
            if (name == "localsearch") {
                if (cfg.coupled) continue; // not edge-monotone; excluded from coupled curves
                auto verdict = arrow_portfolio(g, cfg.r, cfg.n, point.t,
                                               hash_counter(seed, 0x6c73ULL));
                rec.work += verdict.nodes_explored;
                if (verdict.kind == ArrowKind::Fails) {
                    rec.strategy = "localsearch";
                    rec.outcome = TrialOutcome::AvoidingFound;
                    rec.witness = "red_edges=" +
                                  std::to_string(verdict.certificate->red_edge_count());
                    return rec;
                }
                continue;
            }

            AdversaryResult res;
            if (name == "hitting") {
                if (cfg.coupled) {
                    // Edge-monotone success predicate: the copy count alone
                    // decides, so per-seed success is monotone along a
                    // coupled p-grid. (Greedy-verified success is not.)
                    auto copies = enumerate_cliques(g, cfg.r + 1);
                    rec.work += copies.size();
                    if (copies.size() >= cfg.n) continue;
                }
                res = strategy_hitting_set(g, cfg.r, cfg.n, mode);
            } else if (name == "boundary") {
                if (point.big_n != cfg.r * cfg.n + point.t) continue;
                res = strategy_boundary(g, cfg.r, cfg.n, point.t, mode);
            } else if (name == "pinned") {
                if (point.big_n != cfg.r * cfg.n + point.t) continue;
                res = strategy_pinned_cliques(g, cfg.r, cfg.n, point.t, mode);
            }
            rec.work += checks_nodes(res.verification);
            if (res.success) {
                rec.strategy = name;
                rec.outcome = TrialOutcome::AvoidingFound;
                rec.witness = "red_edges=" + std::to_string(res.colouring->red_edge_count());
                return rec;
            }
        }
        if (saw_unknown) {
            rec.outcome = TrialOutcome::Unknown;
            rec.witness = "budget_exhausted";
        }
    } catch (const std::exception& e) {
        rec.outcome = TrialOutcome::Unknown;
        rec.witness = sanitise_witness(std::string("error: ") + e.what());
    }
    return rec;
}

// ------------------------------------------------------------------ cache

namespace {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t trial_cache_key(const ExperimentConfig& cfg, const SweepPoint& point,
                              std::size_t trial_index) {
    std::ostringstream key;
    key << config_cache_salt(cfg) << ";N=" << point.big_n << ";p=" << double_repr(point.p)
        << ";t=" << point.t << ";point=" << point.point_index << ";trial=" << trial_index
        << ";master=" << cfg.master_seed;
    return fnv1a64(key.str());
}

json record_to_json(const TrialRecord& r) {
    return json{{"point_index", r.point_index},
                {"trial_index", r.trial_index},
                {"r", r.r},
                {"n", r.n},
                {"N", r.big_n},
                {"p", r.p},
                {"t", r.t},
                {"seed", r.seed},
                {"strategy", r.strategy},
                {"outcome", outcome_name(r.outcome)},
                {"witness", r.witness},
                {"work", r.work}};
}

std::optional<TrialRecord> record_from_json(const json& j) {
    TrialRecord r;
    try {
        r.point_index = j.at("point_index").get<std::size_t>();
        r.trial_index = j.at("trial_index").get<std::size_t>();
        r.r = j.at("r").get<std::size_t>();
        r.n = j.at("n").get<std::size_t>();
        r.big_n = j.at("N").get<std::size_t>();
        r.p = j.at("p").get<double>();
        r.t = j.at("t").get<std::size_t>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.strategy = j.at("strategy").get<std::string>();
        auto o = outcome_from_name(j.at("outcome").get<std::string>());
        if (!o) return std::nullopt;
        r.outcome = *o;
        r.witness = j.at("witness").get<std::string>();
        r.work = j.at("work").get<std::uint64_t>();
    } catch (const json::exception&) {
        return std::nullopt;
    }
    return r;
}

// Append-only JSONL manifest; doubles as the results cache and the resume
// log. Line-buffered appends under a mutex.
class TrialCache {
public:
    explicit TrialCache(const std::string& path) : path_(path) {
        std::ifstream in(path_);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            json j = json::parse(line, nullptr, false);
            if (j.is_discarded() || !j.contains("key")) continue;
            auto rec = record_from_json(j);
            if (rec) map_[j["key"].get<std::uint64_t>()] = *rec;
        }
    }

    std::optional<TrialRecord> lookup(std::uint64_t key) const {
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    void store(std::uint64_t key, const TrialRecord& rec) {
        std::lock_guard<std::mutex> lock(mu_);
        map_[key] = rec;
        std::ofstream out(path_, std::ios::app);
        json j = record_to_json(rec);
        j["key"] = key;
        out << j.dump() << '\n';
    }

private:
    std::string path_;
    std::unordered_map<std::uint64_t, TrialRecord> map_;
    std::mutex mu_;
};

} // namespace

SweepResult run_sweep(const ExperimentConfig& cfg, const std::string& out_dir,
                      std::size_t workers) {
    fs::create_directories(out_dir);
    std::string cache_dir = cfg.cache_dir.empty() ? out_dir + "/cache" : cfg.cache_dir;
    fs::create_directories(cache_dir);
    TrialCache cache(cache_dir + "/trials.jsonl");

    auto points = plan_points(cfg);
    std::size_t total = points.size() * cfg.trials_per_point;
    std::vector<std::optional<TrialRecord>> slots(total);

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t task = next.fetch_add(1);
            if (task >= total) return;
            const SweepPoint& point = points[task / cfg.trials_per_point];
            std::size_t trial = task % cfg.trials_per_point;
            std::uint64_t key = trial_cache_key(cfg, point, trial);
            if (auto hit = cache.lookup(key)) {
                slots[task] = *hit;
                continue;
            }
            TrialRecord rec = run_trial(cfg, point, trial);
            cache.store(key, rec);
            slots[task] = rec;
        }
    };

    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SweepResult result;
    result.records.reserve(total);
    for (auto& s : slots) result.records.push_back(std::move(*s));
    std::sort(result.records.begin(), result.records.end(),
              [](const TrialRecord& a, const TrialRecord& b) {
                  return std::tie(a.point_index, a.trial_index) <
                         std::tie(b.point_index, b.trial_index);
              });

    std::string axis = cfg.p_grid.size() > 1 || cfg.t_grid.size() <= 1 ? "p" : "t";
    result.curve = aggregate_curve(result.records, axis);

    emit_csv_file(result.records, out_dir + "/records.csv");
    emit_svg(result.curve, out_dir + "/curve.svg");
    return result;
}

// -------------------------------------------------------------------- csv

namespace {
constexpr const char* kCsvHeader =
    "point_index,trial_index,r,n,N,p,t,seed,strategy,outcome,witness,elapsed_ms";
}

void emit_csv(const std::vector<TrialRecord>& records, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.point_index << ',' << r.trial_index << ',' << r.r << ',' << r.n << ','
            << r.big_n << ',' << double_repr(r.p) << ',' << r.t << ',' << r.seed << ','
            << r.strategy << ',' << outcome_name(r.outcome) << ',' << r.witness << ','
            << r.work / 1000 << '\n';
    }
}

void emit_csv_file(const std::vector<TrialRecord>& records, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open for writing");
    emit_csv(records, out);
    if (!out) throw ParseError(path + ": write failed");
}

std::vector<TrialRecord> parse_csv(std::istream& in, const std::string& context) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(context + ": empty file");
    if (line != kCsvHeader) throw ParseError(context + ": unexpected header");
    std::vector<TrialRecord> out;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) f.push_back(tok);
        if (line.back() == ',') f.push_back("");
        if (f.size() != 12)
            throw ParseError(context + ": expected 12 fields, line " + std::to_string(lineno));
        TrialRecord r;
        r.point_index = std::stoull(f[0]);
        r.trial_index = std::stoull(f[1]);
        r.r = std::stoull(f[2]);
        r.n = std::stoull(f[3]);
        r.big_n = std::stoull(f[4]);
        r.p = std::stod(f[5]);
        r.t = std::stoull(f[6]);
        r.seed = std::stoull(f[7]);
        r.strategy = f[8];
        auto o = outcome_from_name(f[9]);
        if (!o) throw ParseError(context + ": bad outcome, line " + std::to_string(lineno));
        r.outcome = *o;
        r.witness = f[10];
        r.work = std::stoull(f[11]) * 1000;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<TrialRecord> parse_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    return parse_csv(in, path);
}

SweepCurve aggregate_curve(const std::vector<TrialRecord>& records, const std::string& axis) {
    SweepCurve curve;
    curve.axis = axis;
    std::vector<std::pair<double, std::pair<std::size_t, std::size_t>>> buckets;
    auto key_of = [&](const TrialRecord& r) -> double {
        if (axis == "t") return static_cast<double>(r.t);
        if (axis == "x")
            return r.p * std::pow(static_cast<double>(r.n),
                                  2.0 / (static_cast<double>(r.r) + 1.0));
        return r.p;
    };
    for (const auto& r : records) {
        double k = key_of(r);
        auto it = std::find_if(buckets.begin(), buckets.end(),
                               [&](const auto& b) { return b.first == k; });
        if (it == buckets.end()) {
            buckets.push_back({k, {0, 0}});
            it = buckets.end() - 1;
        }
        it->second.second += 1;
        if (arrow_positive(r.outcome)) it->second.first += 1;
    }
    std::sort(buckets.begin(), buckets.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [value, counts] : buckets) {
        SweepCurvePoint pt;
        pt.value = value;
        pt.trials = counts.second;
        pt.fraction = counts.second == 0
                          ? 0.0
                          : static_cast<double>(counts.first) / static_cast<double>(counts.second);
        pt.ci = wilson_interval(counts.first, counts.second);
        curve.points.push_back(pt);
    }
    return curve;
}

// -------------------------------------------------------------------- svg

void emit_svg(const SweepCurve& curve, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open for writing");

    constexpr double W = 640, H = 420, ML = 70, MR = 20, MT = 20, MB = 50;
    double xmin = 0, xmax = 1;
    if (!curve.points.empty()) {
        xmin = curve.points.front().value;
        xmax = curve.points.back().value;
        if (xmax <= xmin) xmax = xmin + 1;
    }
    auto sx = [&](double v) { return ML + (v - xmin) / (xmax - xmin) * (W - ML - MR); };
    auto sy = [&](double f) { return MT + (1.0 - f) * (H - MT - MB); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
    out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    // axes
    out << "<line x1=\"" << ML << "\" y1=\"" << sy(0) << "\" x2=\"" << W - MR << "\" y2=\""
        << sy(0) << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ML << "\" y1=\"" << sy(0) << "\" x2=\"" << ML << "\" y2=\"" << MT
        << "\" stroke=\"black\"/>\n";
    for (double f : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        out << "<text x=\"" << ML - 8 << "\" y=\"" << sy(f) + 4
            << "\" font-size=\"11\" text-anchor=\"end\">" << f << "</text>\n";
        out << "<line x1=\"" << ML - 4 << "\" y1=\"" << sy(f) << "\" x2=\"" << ML << "\" y2=\""
            << sy(f) << "\" stroke=\"black\"/>\n";
    }
    out << "<text x=\"" << (ML + W - MR) / 2 << "\" y=\"" << H - 12
        << "\" font-size=\"13\" text-anchor=\"middle\">" << curve.axis << "</text>\n";
    out << "<text x=\"16\" y=\"" << (MT + H - MB) / 2
        << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << (MT + H - MB) / 2 << ")\">arrow-positive fraction</text>\n";

    // CI whiskers
    for (const auto& pt : curve.points) {
        double x = sx(pt.value);
        out << "<line x1=\"" << x << "\" y1=\"" << sy(pt.ci.low) << "\" x2=\"" << x
            << "\" y2=\"" << sy(pt.ci.high) << "\" stroke=\"steelblue\" stroke-width=\"1\"/>\n";
        out << "<line x1=\"" << x - 3 << "\" y1=\"" << sy(pt.ci.low) << "\" x2=\"" << x + 3
            << "\" y2=\"" << sy(pt.ci.low) << "\" stroke=\"steelblue\"/>\n";
        out << "<line x1=\"" << x - 3 << "\" y1=\"" << sy(pt.ci.high) << "\" x2=\"" << x + 3
            << "\" y2=\"" << sy(pt.ci.high) << "\" stroke=\"steelblue\"/>\n";
    }
    // polyline through the estimates
    out << "<polyline fill=\"none\" stroke=\"crimson\" stroke-width=\"1.5\" points=\"";
    for (const auto& pt : curve.points) out << sx(pt.value) << ',' << sy(pt.fraction) << ' ';
    out << "\"/>\n";
    for (const auto& pt : curve.points) {
        out << "<circle cx=\"" << sx(pt.value) << "\" cy=\"" << sy(pt.fraction)
            << "\" r=\"2.5\" fill=\"crimson\"/>\n";
        double x = sx(pt.value);
        out << "<text x=\"" << x << "\" y=\"" << sy(0) + 16
            << "\" font-size=\"10\" text-anchor=\"middle\">" << std::setprecision(3)
            << pt.value << "</text>\n";
    }
    out << "</svg>\n";
    if (!out) throw ParseError(path + ": write failed");
}

} // namespace ramsey
