#include "doctest.h"

#include "torusfk/skoldberg.hpp"

using namespace torusfk;

namespace
{

std::vector<FieldSpec> fields()
{
    return {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5)};
}

} // namespace

TEST_CASE("resolution differentials compose to zero")
{
    for (const auto& spec : fields()) {
        SkoldbergComplex cx(spec, 20);
        CHECK(cx.augmentation_vanishes());
        for (int k = 2; k <= 20; ++k)
            CHECK(cx.composites_vanish(k));
    }
}

TEST_CASE("path bases")
{
    SkoldbergComplex cx(FieldSpec::rationals(), 9);
    CHECK(SkoldbergComplex::path_length(4) == 6);
    CHECK(SkoldbergComplex::path_length(5) == 7);
    // G_{4k} is two copies of the field in degree 3k; G_{4k+1} splits 3k, 3k+1
    CHECK(cx.path_degree(8, 0) == 6);
    CHECK(cx.path_degree(8, 1) == 6);
    CHECK(cx.path_degree(9, 0) == 6);
    CHECK(cx.path_degree(9, 1) == 7);
}

TEST_CASE("dual complex is a complex")
{
    for (const auto& spec : fields()) {
        SkoldbergComplex cx(spec, 12);
        for (int k = 1; k < 12; ++k)
            for (int s = -20; s <= 1; ++s) {
                auto a = cx.dual_matrix(k, s);
                auto b = cx.dual_matrix(k + 1, s);
                for (std::size_t j = 0; j < a.cols; ++j) {
                    SparseVec e;
                    e.add(static_cast<int>(j), FieldValue::one(spec));
                    CHECK(b.apply(a.apply(e, spec), spec).empty());
                }
            }
    }
}

TEST_CASE("resolution agrees with the bar complex for r <= 6")
{
    for (const auto& spec : fields()) {
        CAPTURE(spec.name());
        auto bar = hh_bar(spec, 6);
        CHECK(skoldberg_hh(spec, 6).dims == bar.dims);
        CHECK(ladder_hh(spec, 6).dims == bar.dims);
    }
}

TEST_CASE("periodicity")
{
    auto q = skoldberg_hh(FieldSpec::rationals(), 24);
    CHECK(periodicity_defects(q, 1, 16, 8, -6).empty());
    CHECK(ladder_hh(FieldSpec::rationals(), 24).dims == q.dims);
    auto f2 = skoldberg_hh(FieldSpec::prime(2), 24);
    CHECK(periodicity_defects(f2, 1, 20, 4, -3).empty());
    CHECK(periodicity_defects(skoldberg_hh(FieldSpec::prime(3), 24), 1, 16, 8, -6).empty());
    // over Q the 4-step shift is not a symmetry
    CHECK(!periodicity_defects(q, 1, 20, 4, -3).empty());
}
