#pragma once

#include "sheafcalc/betti.hpp"
#include "sheafcalc/sheaf.hpp"

namespace sheafcalc {

/// Resolution of a rank-r bundle E from 0 -> (r-1)O -> E -> I_Y(3) -> 0: the
/// curve's ideal resolution twisted by 3, with (r-1)O adjoined to position 0.
inline FreeComplex mapping_cone_bundle(const BettiTable &table, std::int64_t rank, std::string name = "E") {
    if (rank < 2)
        throw Error("mapping cone needs rank >= 2, got " + std::to_string(rank));
    if (max_gen_degree(table) > 3)
        throw Error("ideal of '" + table.subject() + "' has a generator of degree " +
                    std::to_string(max_gen_degree(table)) + " > 3");
    const FreeComplex ideal = twist_complex(ideal_complex(table), 3);
    std::vector<SheafSum> terms = ideal.terms();
    terms[0].add(SheafAtom::line(0), rank - 1);
    return FreeComplex(std::move(terms), std::move(name), 3);
}

} // namespace sheafcalc
