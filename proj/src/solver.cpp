#include "bredon/solver.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <map>
#include <thread>

#include "bredon/json_io.hpp"

namespace bredon {

void validate_constraints(const ConstraintSet& c) {
    const int n = c.dimension;
    if (n < 0) throw Error(ErrorCode::InvalidConstraints, "dimension must be >= 0");
    for (const auto& [d, b] : c.betti_total.entries()) {
        if (b < 0)
            throw Error(ErrorCode::InvalidConstraints,
                        "betti_total[" + std::to_string(d) + "] is negative");
        if (d < 0 || d > 2 * n)
            throw Error(ErrorCode::InfeasibleBounds,
                        "betti_total has support in degree " + std::to_string(d) +
                            " outside [0, " + std::to_string(2 * n) + "]");
    }
    if (c.betti_fixed) {
        for (const auto& [d, b] : c.betti_fixed->entries()) {
            if (b < 0)
                throw Error(ErrorCode::InvalidConstraints,
                            "betti_fixed[" + std::to_string(d) + "] is negative");
            if (d < 0 || d > 2 * n)
                throw Error(ErrorCode::InfeasibleBounds,
                            "betti_fixed has support in degree " + std::to_string(d) +
                                " outside [0, " + std::to_string(2 * n) + "]");
        }
        if (c.has_fixed_point && c.betti_fixed->total() == 0)
            throw Error(ErrorCode::InvalidConstraints,
                        "has_fixed_point contradicts an empty betti_fixed");
    }
    if (c.connected && c.betti_total.at(0) != 1)
        throw Error(ErrorCode::InvalidConstraints, "connected requires betti_total[0] = 1");
}

bool satisfies(const NormalFormModule& m, const ConstraintSet& c) {
    if (!m.cw_valid()) return false;
    if (underlying_singular(m).dims() != c.betti_total) return false;
    if (c.betti_fixed && rho_localize(m) != *c.betti_fixed) return false;
    if (c.poincare_dual &&
        !real_manifold_validate(m, c.dimension, c.has_fixed_point, c.connected).passed())
        return false;
    if (c.forgetful_onto_degrees) {
        const GradedDims image = forgetful_image_dims(m);
        for (int d : *c.forgetful_onto_degrees)
            if (image.at(d) != c.betti_total.at(d)) return false;
    }
    if (c.class_filter && classify(m) != *c.class_filter) return false;
    return true;
}

namespace {

// One multiplicity to choose: a free key (p,q) or an antipodal key (r,t),
// anchored at the lowest singular degree it feeds (p resp. r).
struct Variable {
    bool is_free = true;
    int a = 0;
    int b = 0;
    int anchor = 0;
    std::vector<std::pair<int, int>> singular;  // (degree, weight)
    int fixed_degree = -1;                      // free keys only
    int mirror = -1;                            // index, or -1 when outside the box
    bool closes_degree = false;                 // last variable anchored at this degree
};

struct State {
    std::vector<int> mult;
    std::vector<int> used;
    std::vector<int> fixed_used;
};

class Search {
public:
    explicit Search(const ConstraintSet& c) : c_(c), n_(c.dimension), top_(2 * c.dimension) {
        build_variables();
        betti_.assign(top_ + 1, 0);
        for (int d = 0; d <= top_; ++d) betti_[d] = c.betti_total.at(d);
        if (c.betti_fixed) {
            fixed_.assign(top_ + 1, 0);
            for (int d = 0; d <= top_; ++d) fixed_[d] = c.betti_fixed->at(d);
        }
    }

    State initial() const {
        return {std::vector<int>(vars_.size(), 0), std::vector<int>(top_ + 1, 0),
                std::vector<int>(top_ + 1, 0)};
    }

    std::size_t size() const { return vars_.size(); }

    // Calls visit(state) for every admissible value of variable i, with the
    // value assigned in place; state is restored before returning.
    void children(State& s, std::size_t i, const std::function<void(State&)>& visit) const {
        const Variable& v = vars_[i];
        int lo = 0;
        int hi = 0;
        if (c_.poincare_dual && v.mirror < 0) {
            hi = 0;
        } else if (c_.poincare_dual && static_cast<std::size_t>(v.mirror) < i) {
            lo = hi = s.mult[v.mirror];
            if (bound(s, i) < lo) return;
        } else {
            hi = bound(s, i);
        }
        if (c_.poincare_dual && c_.has_fixed_point && c_.connected && v.is_free && v.a == 0 &&
            v.b == 0) {
            if (hi < 1 || lo > 1) return;
            lo = hi = 1;
        }
        for (int value = lo; value <= hi; ++value) {
            assign(s, i, value);
            if (!v.closes_degree || degree_complete(s, v.anchor)) visit(s);
            assign(s, i, -value);
        }
    }

    NormalFormModule to_module(const State& s) const {
        NormalFormModule::FreeMap free;
        NormalFormModule::AntipodalMap antipodal;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (s.mult[i] == 0) continue;
            if (vars_[i].is_free) free[{vars_[i].a, vars_[i].b}] = s.mult[i];
            else antipodal[{vars_[i].a, vars_[i].b}] = s.mult[i];
        }
        return make_module(free, antipodal, true);
    }

    void run(State& s, std::size_t i, std::vector<NormalFormModule>& out) const {
        if (i == vars_.size()) {
            NormalFormModule m = to_module(s);
            if (satisfies(m, c_)) out.push_back(std::move(m));
            return;
        }
        children(s, i, [&](State& next) { run(next, i + 1, out); });
    }

private:
    void build_variables() {
        const int r_min = c_.has_fixed_point ? 1 : 0;
        const int rt_max = c_.has_fixed_point ? top_ - 1 : top_;
        for (int d = 0; d <= top_; ++d) {
            for (int q = 0; q <= std::min(d, n_); ++q) {
                Variable v;
                v.is_free = true;
                v.a = d;
                v.b = q;
                v.anchor = d;
                v.singular = {{d, 1}};
                v.fixed_degree = d - q;
                vars_.push_back(v);
            }
            if (d < r_min) continue;
            for (int t = 0; d + t <= rt_max; ++t) {
                Variable v;
                v.is_free = false;
                v.a = d;
                v.b = t;
                v.anchor = d;
                if (t == 0) v.singular = {{d, 2}};
                else v.singular = {{d, 1}, {d + t, 1}};
                vars_.push_back(v);
            }
            if (!vars_.empty() && vars_.back().anchor == d) vars_.back().closes_degree = true;
        }

        std::map<FreeKey, int> free_index;
        std::map<AntipodalKey, int> antipodal_index;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i].is_free) free_index[FreeKey{vars_[i].a, vars_[i].b}] = int(i);
            else antipodal_index[AntipodalKey{vars_[i].a, vars_[i].b}] = int(i);
        }
        for (auto& v : vars_) {
            if (v.is_free) {
                auto it = free_index.find(pd_mirror(FreeKey{v.a, v.b}, n_));
                v.mirror = it == free_index.end() ? -1 : it->second;
            } else {
                auto it = antipodal_index.find(pd_mirror(AntipodalKey{v.a, v.b}, n_));
                v.mirror = it == antipodal_index.end() ? -1 : it->second;
            }
        }
    }

    // Largest value variable i (and its Poincare partner, which must match)
    // can take without overrunning a Betti budget.
    int bound(const State& s, std::size_t i) const {
        const Variable& v = vars_[i];
        std::map<int, int> singular;
        std::map<int, int> fixed;
        auto collect = [&](const Variable& x) {
            for (const auto& [d, w] : x.singular) singular[d] += w;
            if (x.is_free) fixed[x.fixed_degree] += 1;
        };
        collect(v);
        const bool paired = c_.poincare_dual && v.mirror >= 0 &&
                            static_cast<std::size_t>(v.mirror) > i;
        if (paired) collect(vars_[v.mirror]);

        int hi = std::numeric_limits<int>::max();
        for (const auto& [d, w] : singular) {
            if (d > top_) return 0;
            hi = std::min(hi, (betti_[d] - s.used[d]) / w);
        }
        if (!fixed_.empty()) {
            for (const auto& [d, w] : fixed) {
                if (d < 0 || d > top_) return 0;
                hi = std::min(hi, (fixed_[d] - s.fixed_used[d]) / w);
            }
        }
        return std::max(hi, 0);
    }

    void assign(State& s, std::size_t i, int delta) const {
        const Variable& v = vars_[i];
        s.mult[i] += delta;
        for (const auto& [d, w] : v.singular) s.used[d] += w * delta;
        if (v.is_free) s.fixed_used[v.fixed_degree] += delta;
    }

    bool degree_complete(const State& s, int d) const {
        if (s.used[d] != betti_[d]) return false;
        // Free keys feeding fixed degree d - n all have p <= d, so that degree is final now.
        if (!fixed_.empty() && d - n_ >= 0 && s.fixed_used[d - n_] != fixed_[d - n_]) return false;
        if (c_.forgetful_onto_degrees && c_.forgetful_onto_degrees->count(d)) {
            // Image in degree d: one line per summand anchored at d.
            int image = 0;
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i].anchor == d) image += s.mult[i];
            if (image != betti_[d]) return false;
        }
        return true;
    }

    const ConstraintSet& c_;
    int n_;
    int top_;
    std::vector<Variable> vars_;
    std::vector<int> betti_;
    std::vector<int> fixed_;
};

}  // namespace

std::vector<NormalFormModule> enumerate_decompositions(const ConstraintSet& c,
                                                       const SolveOptions& options) {
    validate_constraints(c);
    const Search search(c);
    std::vector<NormalFormModule> results;

    const unsigned workers = std::max(1u, options.workers);
    if (workers == 1) {
        State s = search.initial();
        search.run(s, 0, results);
    } else {
        // Expand breadth-first until there is enough work to share, then hand
        // frontier nodes out through an atomic cursor.
        struct Node {
            State state;
            std::size_t depth;
        };
        std::vector<Node> frontier{{search.initial(), 0}};
        const std::size_t target = 8 * std::size_t(workers);
        while (frontier.size() < target) {
            std::vector<Node> next;
            bool grew = false;
            for (auto& node : frontier) {
                if (node.depth == search.size()) {
                    next.push_back(std::move(node));
                    continue;
                }
                grew = true;
                search.children(node.state, node.depth, [&](State& child) {
                    next.push_back({child, node.depth + 1});
                });
            }
            frontier = std::move(next);
            if (!grew || frontier.empty()) break;
        }

        std::vector<std::vector<NormalFormModule>> partial(workers);
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t k = cursor++; k < frontier.size(); k = cursor++)
                    search.run(frontier[k].state, frontier[k].depth, partial[w]);
            });
        }
        for (auto& t : pool) t.join();
        for (auto& part : partial)
            results.insert(results.end(), std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
    }

    // Ordered by canonical serialization, so output is schedule-independent.
    std::vector<std::pair<std::string, NormalFormModule>> keyed;
    keyed.reserve(results.size());
    for (auto& m : results) keyed.emplace_back(to_canonical_string(m), std::move(m));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    results.clear();
    for (auto& [key, m] : keyed) results.push_back(std::move(m));
    return results;
}

bool Prediction::admits(MaximalityClass actual) const {
    if (!applicable || !prediction) return true;
    return static_cast<int>(actual) <= static_cast<int>(*prediction);
}

Prediction krasnov_predict(const ConstraintSet& c) {
    Prediction p;
    p.applicable = c.dimension == 2 && c.has_fixed_point && c.poincare_dual &&
                   c.betti_total.at(1) == 0;
    if (p.applicable) p.prediction = MaximalityClass::GaloisMaximalOnly;
    return p;
}

Prediction threefold_predict(const ConstraintSet& c) {
    Prediction p;
    p.applicable = c.dimension == 3 && c.has_fixed_point && c.poincare_dual &&
                   c.betti_total.at(1) == 0 && c.forgetful_onto_degrees &&
                   c.forgetful_onto_degrees->count(4) > 0;
    if (p.applicable) p.prediction = MaximalityClass::GaloisMaximalOnly;
    return p;
}

}  // namespace bredon
