#include "quandle/extensions.hpp"

namespace quandle {

ExtensionSpec trivial_extension(const QuandleTable& base, std::uint64_t modulus) {
    return {base, modulus, CocycleTable::zero(base.order(), modulus), base.is_quandle() ? Mode::quandle : Mode::rack};
}

QuandleTable extend(const ExtensionSpec& spec) {
    const QuandleTable& X = spec.base;
    const std::uint64_t d = spec.modulus;
    if (d == 0) throw InvalidCocycle("extension modulus must be positive");
    if (spec.cocycle.modulus != d && !(d == 1 && spec.cocycle.modulus == 0))
        throw InvalidCocycle("cocycle modulus does not match the extension");
    if (!is_cocycle(X, spec.cocycle, Mode::rack)) throw InvalidCocycle("cocycle condition fails");
    if (spec.mode == Mode::quandle && !is_cocycle(X, spec.cocycle, Mode::quandle))
        throw InvalidCocycle("quandle cocycle must vanish on the diagonal");
    const std::size_t n = X.order();
    const std::size_t size = n * d;
    RawTable raw(size, std::vector<long long>(size));
    for (std::size_t x = 0; x < n; ++x)
        for (std::uint64_t a = 0; a < d; ++a)
            for (std::size_t y = 0; y < n; ++y) {
                const auto xe = static_cast<Element>(x);
                const auto ye = static_cast<Element>(y);
                const auto target_a = static_cast<std::int64_t>((a + static_cast<std::uint64_t>(spec.cocycle(xe, ye))) % d);
                const Element xy = X.op(xe, ye);
                for (std::uint64_t b = 0; b < d; ++b)
                    raw[x * d + a][y * d + b] = pair_index(d, xy, target_a);
            }
    return QuandleTable::from_rows(raw, Mode::rack);
}

TheoremIIReport verify_theorem_ii(const ExtensionSpec& spec, const Word& w) {
    const QuandleTable& X = spec.base;
    if (!satisfies(X, w).satisfied) throw BaseDoesNotSatisfy("base does not satisfy x" + w.text() + " = x");
    TheoremIIReport r;
    const QuandleTable E = extend(spec);
    auto ext = satisfies(E, w);
    r.extension_satisfies = ext.satisfied;
    r.extension_witness = ext.witness;

    r.cocycle_vanishes = true;
    const std::size_t n = X.order();
    for (Element x = 0; x < static_cast<Element>(n) && r.cocycle_vanishes; ++x)
        for_each_tuple(n, w.alphabet(), [&](const std::vector<Element>& ys) {
            Assignment a{x, ys};
            const auto v = evaluate_cocycle(spec.cocycle, cycle_LS(X, w, a));
            if (v != 0) {
                r.cocycle_vanishes = false;
                r.nonvanishing_assignment = a;
                r.nonvanishing_value = v;
                return false;
            }
            return true;
        });
    r.agree = r.extension_satisfies == r.cocycle_vanishes;
    return r;
}

std::string to_string(ConjectureEntry::Status s) {
    switch (s) {
        case ConjectureEntry::Status::match: return "match";
        case ConjectureEntry::Status::mismatch: return "mismatch";
        case ConjectureEntry::Status::skipped_not_connected: return "skipped (extension not connected)";
    }
    return "?";
}

ConjectureReport conjecture_harness(const QuandleTable& X, const std::vector<ExtensionSpec>& specs) {
    ConjectureReport r;
    r.base_type = rack_type(X);
    r.base_connected = is_connected(X);
    auto inn = inner_representation(X);
    r.inner_image_type = rack_type(inn.image);
    r.inner_image_order = inn.image.order();
    r.inner_types_equal = r.inner_image_type == r.base_type;
    for (const auto& spec : specs) {
        const QuandleTable E = extend(spec);
        ConjectureEntry e;
        e.base_type = r.base_type;
        e.extension_type = rack_type(E);
        e.extension_order = E.order();
        if (!is_connected(E)) {
            e.status = ConjectureEntry::Status::skipped_not_connected;
            ++r.skipped;
        } else if (e.extension_type == e.base_type) {
            e.status = ConjectureEntry::Status::match;
            ++r.matches;
        } else {
            e.status = ConjectureEntry::Status::mismatch;
            ++r.mismatches;
        }
        r.extensions.push_back(e);
    }
    return r;
}

}  // namespace quandle
