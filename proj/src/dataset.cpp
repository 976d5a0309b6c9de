#include "garchfit/dataset.hpp"

#include <algorithm>
#include <string>

#include "garchfit/errors.hpp"
#include "garchfit/moments.hpp"
#include "garchfit/rng.hpp"

namespace garchfit {

std::vector<FeatureVector> build_rows(const std::vector<GarchParams>& params,
                                      const FeatureSetKind& kind) {
    std::vector<FeatureVector> rows;
    rows.reserve(params.size());
    for (const GarchParams& p : params) {
        FeatureVector row;
        row.source = p;
        row.target_alpha1 = p.alpha1;
        row.features[0] = raw_even_moment(p, 1);
        row.features[1] = gamma4_closed(p.alpha1, p.beta1);
        switch (kind.kind) {
            case StatKind::MomentsG6: row.features[2] = gamma6_closed(p.alpha1, p.beta1); break;
            case StatKind::MomentsG8: row.features[2] = standardized_moment(p, 4); break;
            case StatKind::MomentsG10: row.features[2] = standardized_moment(p, 5); break;
            case StatKind::AutocovLag:
                row.features[2] = autocov_hat(p.alpha1, p.beta1, kind.lag);
                break;
        }
        rows.push_back(row);
    }
    return rows;
}

namespace {

// Largest-remainder apportionment of n into 40/40/20, ties toward train
// then test (train 5 / test 4 / validate 2 for n = 11).
std::array<std::size_t, 3> split_sizes(std::size_t n) {
    const std::array<double, 3> weights{0.4, 0.4, 0.2};
    std::array<std::size_t, 3> sizes{};
    std::array<double, 3> remainders{};
    std::size_t assigned = 0;
    for (int i = 0; i < 3; ++i) {
        const double ideal = weights[i] * static_cast<double>(n);
        sizes[i] = static_cast<std::size_t>(ideal);
        remainders[i] = ideal - static_cast<double>(sizes[i]);
        assigned += sizes[i];
    }
    for (std::size_t left = n - assigned; left > 0; --left) {
        int best = 0;
        for (int i = 1; i < 3; ++i) {
            if (remainders[i] > remainders[best]) best = i;
        }
        ++sizes[best];
        remainders[best] = -1.0;
    }
    return sizes;
}

}  // namespace

DatasetSplit split_40_40_20(std::vector<FeatureVector> rows, std::uint64_t seed) {
    if (rows.size() < 5) {
        throw TooFewRows("need at least 5 rows to split 40/40/20, got " +
                         std::to_string(rows.size()));
    }
    Rng rng(seed);
    rng.shuffle(rows);
    const auto sizes = split_sizes(rows.size());
    DatasetSplit split;
    auto it = rows.begin();
    split.train.assign(it, it + static_cast<std::ptrdiff_t>(sizes[0]));
    it += static_cast<std::ptrdiff_t>(sizes[0]);
    split.test.assign(it, it + static_cast<std::ptrdiff_t>(sizes[1]));
    it += static_cast<std::ptrdiff_t>(sizes[1]);
    split.validate.assign(it, rows.end());
    return split;
}

ScalerParams fit_scaler(const std::vector<FeatureVector>& train_rows) {
    if (train_rows.size() < 2) {
        throw TooFewRows("scaler needs at least 2 rows, got " + std::to_string(train_rows.size()));
    }
    ScalerParams s;
    for (int c = 0; c < 3; ++c) {
        s.features[c] = {train_rows.front().features[c], train_rows.front().features[c]};
    }
    s.target = {train_rows.front().target_alpha1, train_rows.front().target_alpha1};
    for (const FeatureVector& row : train_rows) {
        for (int c = 0; c < 3; ++c) {
            s.features[c].min = std::min(s.features[c].min, row.features[c]);
            s.features[c].max = std::max(s.features[c].max, row.features[c]);
        }
        s.target.min = std::min(s.target.min, row.target_alpha1);
        s.target.max = std::max(s.target.max, row.target_alpha1);
    }
    const auto check = [](const MinMaxColumn& c, const std::string& name) {
        if (!(c.max > c.min)) {
            throw DegenerateColumn("column '" + name + "' is constant (min == max == " +
                                   std::to_string(c.min) + ")");
        }
    };
    check(s.features[0], "f1");
    check(s.features[1], "f2");
    check(s.features[2], "f3");
    check(s.target, "target");
    return s;
}

std::array<double, 3> apply_scaler(const ScalerParams& s, const std::array<double, 3>& features) {
    return {apply_scaler(s.features[0], features[0]), apply_scaler(s.features[1], features[1]),
            apply_scaler(s.features[2], features[2])};
}

}  // namespace garchfit
