#pragma once

// The worked degree-4 generator c = (1,2,3,4) + (13,23,3,4) + (133,233,3,4)
// on a type-3 quandle: every face of c is rebuilt term by term from the
// operation table and compared with the library's face maps.

#include <sstream>
#include <string>

#include "quandle/chains.hpp"

namespace example {

using namespace quandle;

inline FormalChain sum(std::size_t degree, std::initializer_list<Tuple> ts) {
    FormalChain c(degree);
    for (const auto& t : ts) c.add(t);
    return c;
}

/// Empty string on success, otherwise the first mismatch.
inline std::string check_type3_generator(const QuandleTable& X) {
    const std::size_t n = X.order();
    auto op = [&](Element a, Element b) { return X.op(a, b); };
    const Word aaa = Word::parse("aaa");
    for (Element x1 = 0; x1 < static_cast<Element>(n); ++x1)
        for (Element x2 = 0; x2 < static_cast<Element>(n); ++x2)
            for (Element x3 = 0; x3 < static_cast<Element>(n); ++x3)
                for (Element x4 = 0; x4 < static_cast<Element>(n); ++x4) {
                    std::ostringstream where;
                    where << "at (" << x1 + 1 << "," << x2 + 1 << "," << x3 + 1 << "," << x4 + 1 << "): ";
                    const Element _13 = op(x1, x3), _23 = op(x2, x3), _133 = op(_13, x3), _233 = op(_23, x3);
                    const Element _12 = op(x1, x2), _14 = op(x1, x4), _24 = op(x2, x4), _34 = op(x3, x4);

                    const FormalChain c = sum(4, {{x1, x2, x3, x4}, {_13, _23, x3, x4}, {_133, _233, x3, x4}});
                    if (identity_generator(X, aaa, 2, {x1, x2, x4}, {x3}) != c) return where.str() + "generator";

                    const FormalChain d2 = sum(3, {{x1, x3, x4}, {_13, x3, x4}, {_133, x3, x4}});
                    if (face(X, c, 2, FaceKind::d) != d2) return where.str() + "d_2";
                    if (identity_generator(X, aaa, 1, {x1, x4}, {x3}) != d2) return where.str() + "d_2 not a generator";

                    const FormalChain delta2_raw =
                        sum(3, {{_12, x3, x4}, {op(_13, _23), x3, x4}, {op(_133, _233), x3, x4}});
                    const FormalChain delta2 =
                        sum(3, {{_12, x3, x4}, {op(_12, x3), x3, x4}, {op(op(_12, x3), x3), x3, x4}});
                    if (face(X, c, 2, FaceKind::delta) != delta2_raw) return where.str() + "delta_2";
                    if (delta2_raw != delta2) return where.str() + "delta_2 rewriting";
                    if (identity_generator(X, aaa, 1, {_12, x4}, {x3}) != delta2)
                        return where.str() + "delta_2 not a generator";

                    if (!(face(X, c, 3, FaceKind::d) - face(X, c, 3, FaceKind::delta)).is_zero())
                        return where.str() + "h=3 terms do not cancel";

                    const FormalChain d4 = sum(3, {{x1, x2, x3}, {_13, _23, x3}, {_133, _233, x3}});
                    if (face(X, c, 4, FaceKind::d) != d4) return where.str() + "d_4";
                    if (identity_generator(X, aaa, 2, {x1, x2}, {x3}) != d4) return where.str() + "d_4 not a generator";

                    const FormalChain delta4 = sum(3, {{_14, _24, _34},
                                                       {op(_13, x4), op(_23, x4), _34},
                                                       {op(_133, x4), op(_233, x4), _34}});
                    if (face(X, c, 4, FaceKind::delta) != delta4) return where.str() + "delta_4";
                    const FormalChain delta4_rewritten =
                        sum(3, {{_14, _24, _34},
                                {op(_14, _34), op(_24, _34), _34},
                                {op(op(_14, _34), _34), op(op(_24, _34), _34), _34}});
                    if (delta4 != delta4_rewritten) return where.str() + "delta_4 rewriting";
                    if (identity_generator(X, aaa, 2, {_14, _24}, {_34}) != delta4)
                        return where.str() + "delta_4 not a generator";

                    const FormalChain expected = (d2 - delta2) + (d4 - delta4);
                    if (boundary(X, c) != expected) return where.str() + "boundary";
                }
    return {};
}

}  // namespace example
