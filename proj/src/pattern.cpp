#include "sdw/pattern.hpp"

namespace sdw {

Pattern pattern_glue(const Pattern& p1, const Pattern& p2) {
    Shape overlap = shape_intersect(p1.support, p2.support);
    for (const auto& p : overlap.points())
        if (p1.at(p) != p2.at(p))
            throw std::invalid_argument("pattern_glue: conflict at " +
                                        Shape({p}).to_string());
    Shape u = shape_union(p1.support, p2.support);
    std::vector<Symbol> vals;
    vals.reserve(u.size());
    for (const auto& p : u.points())
        vals.push_back(p1.defined_at(p) ? p1.at(p) : p2.at(p));
    return Pattern(u, std::move(vals));
}

}  // namespace sdw
