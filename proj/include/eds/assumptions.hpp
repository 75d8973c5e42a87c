#pragma once

#include "eds/param_rational.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace eds {

enum class Truth { yes, no, ambiguous };

const char* to_string(Truth t);

// Facts about parameters. Equalities are kept solved as ordered
// substitutions param := value; disequalities and per-parameter flags
// decide "provably nonzero".
class AssumptionSet {
public:
    // expr = 0. Solved for a parameter that appears linearly with a constant
    // coefficient; throws if none does.
    void add_equality(const ParamRational& expr);
    void add_substitution(const std::string& param, const ParamRational& value);
    void add_disequality(const ParamRational& expr);
    void add_nonzero(const std::string& param) { nonzero_.insert(param); }
    void add_integer(const std::string& param) { integer_.insert(param); }

    AssumptionSet merged(const AssumptionSet& other) const;

    const std::vector<std::pair<std::string, ParamRational>>& substitutions() const { return subs_; }
    const std::vector<ParamRational>& disequalities() const { return diseqs_; }
    const std::set<std::string>& nonzero_params() const { return nonzero_; }
    const std::set<std::string>& integer_params() const { return integer_; }
    bool empty() const { return subs_.empty() && diseqs_.empty() && nonzero_.empty() && integer_.empty(); }

    ParamRational apply(const ParamRational& r) const;
    bool provably_nonzero(const ParamRational& r) const;
    Truth is_zero(const ParamRational& r) const;

    // Throws when some disequality collapses to zero under the equalities.
    void check_consistent() const;

    std::vector<std::string> describe() const;

private:
    std::vector<std::pair<std::string, ParamRational>> subs_;
    std::vector<ParamRational> diseqs_;
    std::set<std::string> nonzero_, integer_;
};

}  // namespace eds
