#include <vnfdeploy/ilp.hpp>

#include <algorithm>
#include <cmath>

namespace vnfdeploy {

std::size_t IlpModel::binary_count() const
{
    return static_cast<std::size_t>(std::count(binary.begin(), binary.end(), true));
}

std::size_t IlpModel::continuous_count() const
{
    return binary.size() - binary_count();
}

std::optional<std::size_t> IlpModel::find(std::string_view name) const
{
    const auto it = std::find(var_names.begin(), var_names.end(), name);
    if (it == var_names.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - var_names.begin());
}

std::string rate_var_name(std::size_t s, std::size_t n, CloudIndex k)
{
    return "r_s" + std::to_string(s) + "_n" + std::to_string(n + 1) + "_k" + std::to_string(k);
}

std::string placement_var_name(std::size_t s, std::size_t n, CloudIndex k)
{
    return "x_s" + std::to_string(s) + "_n" + std::to_string(n + 1) + "_k" + std::to_string(k);
}

namespace {

class Builder
{
public:
    Builder(const Instance& instance, const RateTable& table)
        : instance_(instance), table_(table), clouds_(instance.infra.cloud_count())
    {
        std::size_t offset = 0;
        for (const ChainRequest& chain : instance.chains) {
            chain_offset_.push_back(offset);
            offset += chain.vnfs.size();
        }
        vnfs_ = offset;
    }

    IlpModel build()
    {
        declare_variables();
        one_hot_rows();
        capacity_rows();
        placement_fixings();
        split_cuts();
        base_rows();
        penalty_rows();
        return std::move(model_);
    }

private:
    std::size_t r(std::size_t s, std::size_t n, CloudIndex k) const { return (chain_offset_[s] + n) * clouds_ + k; }
    std::size_t x(std::size_t s, std::size_t n, CloudIndex k) const { return vnfs_ * clouds_ + r(s, n, k); }

    template <typename Fn>
    void for_each_vnf(Fn&& fn) const
    {
        for (std::size_t s = 0; s < instance_.chains.size(); ++s) {
            for (std::size_t n = 0; n < instance_.chains[s].vnfs.size(); ++n) {
                fn(s, n);
            }
        }
    }

    void add(std::string name, std::vector<LinearTerm> terms, Sense sense, double rhs)
    {
        std::erase_if(terms, [](const LinearTerm& t) { return t.coef == 0.0; });
        model_.constraints.push_back({std::move(name), std::move(terms), sense, rhs});
    }

    static std::string tag(std::size_t s, std::size_t n, CloudIndex k)
    {
        return "s" + std::to_string(s) + "_n" + std::to_string(n + 1) + "_k" + std::to_string(k);
    }

    void declare_variables()
    {
        for (int pass = 0; pass < 2; ++pass) {
            for_each_vnf([&](std::size_t s, std::size_t n) {
                for (CloudIndex k = 0; k < clouds_; ++k) {
                    const bool is_x = pass == 1;
                    model_.var_names.push_back(is_x ? placement_var_name(s, n, k) : rate_var_name(s, n, k));
                    model_.binary.push_back(is_x);
                    model_.objective.push_back(is_x ? 0.0 : 1.0);
                }
            });
        }
    }

    void one_hot_rows()
    {
        for_each_vnf([&](std::size_t s, std::size_t n) {
            std::vector<LinearTerm> terms;
            for (CloudIndex k = 0; k < clouds_; ++k) {
                terms.push_back({x(s, n, k), 1.0});
            }
            add("onehot_s" + std::to_string(s) + "_n" + std::to_string(n + 1), std::move(terms), Sense::equal, 1.0);
        });
    }

    void capacity_rows()
    {
        if (vnfs_ == 0) {
            return;
        }
        for (CloudIndex k = 0; k < clouds_; ++k) {
            std::vector<LinearTerm> terms;
            for_each_vnf([&](std::size_t s, std::size_t n) { terms.push_back({r(s, n, k), 1.0}); });
            add("cap_k" + std::to_string(k), std::move(terms), Sense::less_equal,
                instance_.infra.clouds[k].capacity_gflops_s);
        }
    }

    void placement_fixings()
    {
        for (std::size_t s = 0; s < instance_.chains.size(); ++s) {
            if (instance_.chains[s].vnfs.empty()) {
                continue;
            }
            for (CloudIndex k = 0; k < clouds_; ++k) {
                if (!table_.first_vnf(s, k)) {
                    add("place_" + tag(s, 0, k), {{x(s, 0, k), 1.0}}, Sense::equal, 0.0);
                }
            }
        }
    }

    void split_cuts()
    {
        for_each_vnf([&](std::size_t s, std::size_t n) {
            if (n + 1 >= instance_.chains[s].vnfs.size()) {
                return;
            }
            for (CloudIndex k = 0; k < clouds_; ++k) {
                for (CloudIndex j = 0; j < clouds_; ++j) {
                    if (j == k) {
                        continue;
                    }
                    const bool ok = table_.split_feasible(s, n, k, j, Direction::forward) &&
                                    table_.split_feasible(s, n + 1, j, k, Direction::backward);
                    if (!ok) {
                        add("cut_" + tag(s, n, k) + "_k" + std::to_string(j),
                            {{x(s, n, k), 1.0}, {x(s, n + 1, j), 1.0}}, Sense::less_equal, 1.0);
                    }
                }
            }
        });
    }

    void base_rows()
    {
        for_each_vnf([&](std::size_t s, std::size_t n) {
            for (CloudIndex k = 0; k < clouds_; ++k) {
                const double base = table_.base_raw(s, n, k);
                if (std::isfinite(base) && base != 0.0) {
                    add("base_" + tag(s, n, k), {{r(s, n, k), 1.0}, {x(s, n, k), -base}}, Sense::greater_equal, 0.0);
                }
            }
        });
    }

    void penalty_rows()
    {
        for_each_vnf([&](std::size_t s, std::size_t n) {
            const std::size_t length = instance_.chains[s].vnfs.size();
            for (CloudIndex k = 0; k < clouds_; ++k) {
                const double base = table_.base_raw(s, n, k);
                if (!std::isfinite(base)) {
                    continue;
                }
                for (CloudIndex j = 0; j < clouds_; ++j) {
                    if (j == k) {
                        continue;
                    }
                    if (n + 1 < length) {
                        penalty_row("fwd_", s, n, k, j, n + 1, Direction::forward, base);
                    }
                    if (n > 0) {
                        penalty_row("bwd_", s, n, k, j, n - 1, Direction::backward, base);
                    }
                }
            }
        });
    }

    // r_{s,n,k} >= base*x_{s,n,k} + dC*(x_{s,n,k} + x_{s,m,j} - 1)
    void penalty_row(const char* prefix, std::size_t s, std::size_t n, CloudIndex k, CloudIndex j, std::size_t m,
                     Direction direction, double base)
    {
        const double delta = table_.penalty_raw(s, n, k, j, direction);
        if (!std::isfinite(delta) || delta <= 0.0) {
            return;
        }
        add(prefix + tag(s, n, k) + "_k" + std::to_string(j),
            {{r(s, n, k), 1.0}, {x(s, n, k), -(base + delta)}, {x(s, m, j), -delta}}, Sense::greater_equal, -delta);
    }

    const Instance& instance_;
    const RateTable& table_;
    std::size_t clouds_;
    std::size_t vnfs_ = 0;
    std::vector<std::size_t> chain_offset_;
    IlpModel model_;
};

} // namespace

IlpModel build_ilp(const Instance& instance, const RateTable& table)
{
    return Builder(instance, table).build();
}

IlpModel build_ilp(const Instance& instance)
{
    return build_ilp(instance, RateTable(instance));
}

Completion minimal_completion(const IlpModel& model, const std::vector<double>& binaries_by_var, double tolerance)
{
    Completion out;
    out.values.assign(model.var_names.size(), 0.0);
    for (std::size_t v = 0; v < model.var_names.size(); ++v) {
        if (model.binary[v]) {
            out.values[v] = binaries_by_var.at(v);
        }
    }

    for (const LinearConstraint& row : model.constraints) {
        if (row.sense != Sense::greater_equal) {
            continue;
        }
        std::optional<LinearTerm> free_term;
        std::size_t free_count = 0;
        double fixed = 0.0;
        for (const LinearTerm& t : row.terms) {
            if (model.binary[t.var]) {
                fixed += t.coef * out.values[t.var];
            } else {
                ++free_count;
                free_term = t;
            }
        }
        if (free_count == 1 && free_term->coef > 0.0) {
            const double bound = (row.rhs - fixed) / free_term->coef;
            out.values[free_term->var] = std::max(out.values[free_term->var], bound);
        }
    }

    out.feasible = true;
    for (const LinearConstraint& row : model.constraints) {
        double lhs = 0.0;
        for (const LinearTerm& t : row.terms) {
            lhs += t.coef * out.values[t.var];
        }
        bool ok = true;
        switch (row.sense) {
        case Sense::less_equal:
            ok = lhs <= row.rhs + tolerance;
            break;
        case Sense::greater_equal:
            ok = lhs >= row.rhs - tolerance;
            break;
        case Sense::equal:
            ok = std::abs(lhs - row.rhs) <= tolerance;
            break;
        }
        if (!ok) {
            out.feasible = false;
            out.violated = row.name;
            break;
        }
    }

    for (std::size_t v = 0; v < model.var_names.size(); ++v) {
        out.objective += model.objective[v] * out.values[v];
    }
    return out;
}

std::vector<double> assignment_to_binaries(const IlpModel& model, const Assignment& a)
{
    std::vector<double> values(model.var_names.size(), 0.0);
    for (std::size_t s = 0; s < a.placement.size(); ++s) {
        for (std::size_t n = 0; n < a.placement[s].size(); ++n) {
            const auto idx = model.find(placement_var_name(s, n, a.placement[s][n]));
            if (!idx) {
                throw std::out_of_range("assignment does not match the model: " +
                                        placement_var_name(s, n, a.placement[s][n]));
            }
            values[*idx] = 1.0;
        }
    }
    return values;
}

} // namespace vnfdeploy
