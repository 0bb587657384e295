#include "ldeq/distance.hpp"

#include "text.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ldeq {

DistanceModel DistanceModel::from_matrix(std::vector<std::vector<double>> dist) {
    DistanceModel m;
    m.n_ = static_cast<int>(dist.size());
    m.source_ = DistanceSource::kMatrix;
    m.dist_.reserve(static_cast<size_t>(m.n_) * m.n_);
    for (int i = 0; i < m.n_; ++i) {
        if (static_cast<int>(dist[i].size()) != m.n_) {
            throw std::invalid_argument("distance matrix row " + std::to_string(i + 1) +
                                        " has the wrong length");
        }
        for (int j = 0; j < m.n_; ++j) {
            double v = dist[i][j];
            if (!(v >= 0)) throw std::invalid_argument("negative or NaN distance");
            if (v != dist[j][i]) {
                throw std::invalid_argument("distance matrix is not symmetric at (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            }
            if (i == j && v != 0) throw std::invalid_argument("non-zero self-distance");
            m.dist_.push_back(v);
        }
    }
    return m;
}

DistanceModel DistanceModel::from_points(std::vector<std::vector<double>> coords) {
    DistanceModel m;
    m.n_ = static_cast<int>(coords.size());
    m.source_ = DistanceSource::kPoints;
    const size_t dim = coords.empty() ? 0 : coords.front().size();
    for (const auto& c : coords) {
        if (c.size() != dim) throw std::invalid_argument("points of mixed dimension");
    }
    m.dist_.assign(static_cast<size_t>(m.n_) * m.n_, 0.0);
    for (int i = 0; i < m.n_; ++i) {
        for (int j = i + 1; j < m.n_; ++j) {
            double sq = 0;
            for (size_t k = 0; k < dim; ++k) {
                double diff = coords[i][k] - coords[j][k];
                sq += diff * diff;
            }
            double d = std::sqrt(sq);
            m.dist_[static_cast<size_t>(i) * m.n_ + j] = d;
            m.dist_[static_cast<size_t>(j) * m.n_ + i] = d;
        }
    }
    m.points_ = std::move(coords);
    return m;
}

DistanceModel DistanceModel::from_graph(int n, std::vector<std::pair<Voter, Voter>> edges) {
    DistanceModel m;
    m.n_ = n;
    m.source_ = DistanceSource::kGraph;
    std::vector<std::vector<Voter>> adj(static_cast<size_t>(n) + 1);
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range");
        }
        if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    const double inf = std::numeric_limits<double>::infinity();
    m.dist_.assign(static_cast<size_t>(n) * n, inf);
    std::vector<int> hops(static_cast<size_t>(n) + 1);
    std::deque<Voter> queue;
    for (Voter src = 1; src <= n; ++src) {
        std::fill(hops.begin(), hops.end(), -1);
        hops[src] = 0;
        queue.assign(1, src);
        while (!queue.empty()) {
            Voter u = queue.front();
            queue.pop_front();
            for (Voter v : adj[u]) {
                if (hops[v] >= 0) continue;
                hops[v] = hops[u] + 1;
                queue.push_back(v);
            }
        }
        for (Voter v = 1; v <= n; ++v) {
            if (hops[v] >= 0) m.dist_[static_cast<size_t>(src - 1) * n + (v - 1)] = hops[v];
        }
    }
    m.edges_ = std::move(edges);
    return m;
}

PreferenceProfile build_db_profile(const DistanceModel& model, const ThresholdVector& thresholds,
                                   const std::vector<Voter>& abstainers) {
    const int n = model.size();
    if (static_cast<int>(thresholds.size()) != n) {
        throw std::invalid_argument("expected " + std::to_string(n) + " thresholds, got " +
                                    std::to_string(thresholds.size()));
    }
    for (int i = 0; i < n; ++i) {
        if (!(thresholds[i] >= 0)) {
            throw std::invalid_argument("voter " + std::to_string(i + 1) + " has a negative threshold");
        }
    }
    std::vector<char> abstains(static_cast<size_t>(n) + 1, 0);
    for (Voter a : abstainers) {
        if (a < 1 || a > n) throw std::invalid_argument("abstainer " + std::to_string(a) + " out of range");
        abstains[a] = 1;
    }
    std::vector<std::vector<Voter>> rankings(static_cast<size_t>(n));
    std::vector<Voter> others;
    for (Voter i = 1; i <= n; ++i) {
        others.clear();
        for (Voter j = 1; j <= n; ++j) {
            if (j != i) others.push_back(j);
        }
        std::stable_sort(others.begin(), others.end(),
                         [&](Voter a, Voter b) { return model(i, a) < model(i, b); });
        auto& row = rankings[static_cast<size_t>(i - 1)];
        const double at = thresholds[static_cast<size_t>(i - 1)];
        for (Voter j : others) {
            if (model(i, j) <= at) row.push_back(j);
        }
        if (abstains[i]) {
            row.push_back(kAbstain);
            row.push_back(i);
        } else {
            row.push_back(i);
            row.push_back(kAbstain);
        }
        for (Voter j : others) {
            if (!(model(i, j) <= at)) row.push_back(j);
        }
    }
    return PreferenceProfile(std::move(rankings));
}

ThresholdCheck check_thresholds(const PreferenceProfile& p, const ThresholdVector& thresholds) {
    const int n = p.size();
    if (static_cast<int>(thresholds.size()) != n) {
        throw std::invalid_argument("threshold count does not match the profile");
    }
    for (Voter i = 1; i <= n; ++i) {
        if (p.is_abstainer(i)) continue;
        for (Voter j = 1; j <= n; ++j) {
            if (j == i || p.is_abstainer(j) || !p.accepts(i, j)) continue;
            if (thresholds[i - 1] <= thresholds[j - 1] && !p.accepts(j, i)) return {false, i, j};
        }
    }
    return {};
}

ThresholdCheck check_thresholds(const PreferenceProfile& p, const DistanceModel& model,
                                const ThresholdVector& thresholds) {
    const int n = p.size();
    if (model.size() != n || static_cast<int>(thresholds.size()) != n) {
        throw std::invalid_argument("model size does not match the profile");
    }
    for (Voter i = 1; i <= n; ++i) {
        for (Voter j = 1; j <= n; ++j) {
            if (j == i) continue;
            if (p.accepts(i, j) != (model(i, j) <= thresholds[i - 1])) return {false, i, j};
        }
    }
    return {};
}

DbSolution solve_equilibrium_db(const PreferenceProfile& p, const ThresholdVector& thresholds) {
    auto check = check_thresholds(p, thresholds);
    if (!check) {
        throw std::invalid_argument("thresholds inconsistent with the profile: voter " +
                                    std::to_string(check.i) + " accepts " + std::to_string(check.j) +
                                    " without a larger threshold, but is not accepted back");
    }
    const int n = p.size();
    std::vector<Voter> pool = p.non_abstainers();
    std::stable_sort(pool.begin(), pool.end(),
                     [&](Voter a, Voter b) { return thresholds[a - 1] < thresholds[b - 1]; });
    std::vector<char> gone(static_cast<size_t>(n) + 1, 0);
    DbSolution s;
    for (Voter i : pool) {
        if (gone[i]) continue;
        s.order.push_back(i);
        gone[i] = 1;
        for (Voter j : pool) {
            if (!gone[j] && p.accepts(j, i)) gone[j] = 1;
        }
    }
    s.gurus = s.order;
    std::sort(s.gurus.begin(), s.gurus.end());
    s.delegation = kernel_to_delegation(p, s.gurus);
    return s;
}

namespace {

bool parse_flag(std::string_view w, int line) {
    if (w == "0" || w == "voter") return false;
    if (w == "1" || w == "abstainer") return true;
    throw ParseError(line, "expected abstainer flag (0, 1, voter, abstainer), got '" +
                               std::string(w) + "'");
}

} // namespace

DbInstance parse_points(const std::string& input) {
    std::vector<std::vector<double>> coords;
    DbInstance inst;
    int line_no = 0;
    size_t dim = 0;
    for (auto raw : text::split_lines(input)) {
        ++line_no;
        auto w = text::words(text::strip_comment(raw));
        if (w.empty()) continue;
        if (w.size() < 3) throw ParseError(line_no, "expected 'id x1 ... xd threshold flag'");
        auto id = text::to_int(w[0], line_no, "voter id");
        if (id != static_cast<long long>(coords.size()) + 1) {
            throw ParseError(line_no, "voter ids must be 1..n in order, got " + std::to_string(id));
        }
        size_t d = w.size() - 3;
        if (coords.empty()) dim = d;
        else if (d != dim) throw ParseError(line_no, "dimension differs from the first point");
        std::vector<double> c;
        for (size_t k = 0; k < d; ++k) c.push_back(text::to_double(w[1 + k], line_no, "coordinate"));
        double at = text::to_double(w[w.size() - 2], line_no, "threshold");
        if (!(at >= 0)) throw ParseError(line_no, "negative threshold");
        if (parse_flag(w.back(), line_no)) inst.abstainers.push_back(static_cast<Voter>(id));
        inst.thresholds.push_back(at);
        coords.push_back(std::move(c));
    }
    inst.model = DistanceModel::from_points(std::move(coords));
    return inst;
}

std::string format_points(const DbInstance& inst) {
    const auto& pts = inst.model.points();
    std::vector<char> abst(static_cast<size_t>(inst.model.size()) + 1, 0);
    for (Voter a : inst.abstainers) abst[a] = 1;
    std::ostringstream os;
    os << "# id coordinates threshold abstainer\n";
    for (size_t i = 0; i < pts.size(); ++i) {
        os << i + 1;
        for (double x : pts[i]) os << ' ' << text::format_double(x);
        os << ' ' << text::format_double(inst.thresholds[i]) << ' ' << (abst[i + 1] ? 1 : 0) << '\n';
    }
    return os.str();
}

DbInstance parse_graph(const std::string& input) {
    DbInstance inst;
    int n = -1;
    bool have_thresholds = false;
    std::vector<std::pair<Voter, Voter>> edges;
    int line_no = 0;
    for (auto raw : text::split_lines(input)) {
        ++line_no;
        auto w = text::words(text::strip_comment(raw));
        if (w.empty()) continue;
        if (n < 0) {
            if (w.size() != 2 || w[0] != "graph") throw ParseError(line_no, "expected 'graph <n>'");
            n = static_cast<int>(text::to_int(w[1], line_no, "voter count"));
            if (n < 0) throw ParseError(line_no, "negative voter count");
            continue;
        }
        if (w[0] == "thresholds") {
            if (static_cast<int>(w.size()) != n + 1) {
                throw ParseError(line_no, "expected " + std::to_string(n) + " thresholds");
            }
            for (size_t k = 1; k < w.size(); ++k) {
                double at = text::to_double(w[k], line_no, "threshold");
                if (!(at >= 0)) throw ParseError(line_no, "negative threshold");
                inst.thresholds.push_back(at);
            }
            have_thresholds = true;
            continue;
        }
        if (w[0] == "abstainers") {
            for (size_t k = 1; k < w.size(); ++k) {
                auto a = text::to_int(w[k], line_no, "voter id");
                if (a < 1 || a > n) throw ParseError(line_no, "abstainer out of range");
                inst.abstainers.push_back(static_cast<Voter>(a));
            }
            continue;
        }
        if (w.size() != 2) throw ParseError(line_no, "expected an edge 'u v'");
        auto u = text::to_int(w[0], line_no, "voter id");
        auto v = text::to_int(w[1], line_no, "voter id");
        if (u < 1 || u > n || v < 1 || v > n || u == v) {
            throw ParseError(line_no, "invalid edge " + std::to_string(u) + " " + std::to_string(v));
        }
        edges.emplace_back(static_cast<Voter>(u), static_cast<Voter>(v));
    }
    if (n < 0) throw ParseError(0, "missing 'graph <n>' header");
    if (!have_thresholds) throw ParseError(0, "missing 'thresholds' line");
    inst.model = DistanceModel::from_graph(n, std::move(edges));
    return inst;
}

std::string format_graph(const DbInstance& inst) {
    std::ostringstream os;
    os << "graph " << inst.model.size() << "\nthresholds";
    for (double t : inst.thresholds) os << ' ' << text::format_double(t);
    os << '\n';
    if (!inst.abstainers.empty()) {
        os << "abstainers";
        for (Voter a : inst.abstainers) os << ' ' << a;
        os << '\n';
    }
    for (auto [u, v] : inst.model.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

DbInstance parse_db_instance(const std::string& input) {
    for (auto raw : text::split_lines(input)) {
        auto w = text::words(text::strip_comment(raw));
        if (w.empty()) continue;
        return w[0] == "graph" ? parse_graph(input) : parse_points(input);
    }
    throw ParseError(0, "empty distance model");
}

std::string format_db_instance(const DbInstance& inst) {
    switch (inst.model.source()) {
    case DistanceSource::kGraph: return format_graph(inst);
    case DistanceSource::kPoints: return format_points(inst);
    case DistanceSource::kMatrix: break;
    }
    throw std::invalid_argument("matrix distance models have no text format");
}

} // namespace ldeq
