#pragma once

#include <functional>
#include <string>

namespace ted {

// Node edit costs. Custom models must keep ren(a, a) == 0.
struct CostModel {
    std::function<double(const std::string&)> del;
    std::function<double(const std::string&)> ins;
    std::function<double(const std::string&, const std::string&)> ren;

    // del = ins = 1, ren(a, b) = 0 iff a == b else 1.
    static CostModel unit();
    // Label-independent costs; renames between equal labels stay free.
    static CostModel uniform(double del_cost, double ins_cost, double ren_cost);
};

inline CostModel CostModel::unit() { return uniform(1.0, 1.0, 1.0); }

inline CostModel CostModel::uniform(double del_cost, double ins_cost,
                                    double ren_cost) {
    CostModel m;
    m.del = [del_cost](const std::string&) { return del_cost; };
    m.ins = [ins_cost](const std::string&) { return ins_cost; };
    m.ren = [ren_cost](const std::string& a, const std::string& b) {
        return a == b ? 0.0 : ren_cost;
    };
    return m;
}

}  // namespace ted
