#pragma once

#include <memory>
#include <shared_mutex>
#include <vector>

#include "bern/rational.hpp"

namespace bern {

/// Pascal-row cache of binomial coefficients. Rows are appended on demand and
/// never modified afterwards; concurrent readers are safe.
class BinomialTable {
public:
    BinomialTable() = default;
    BinomialTable(const BinomialTable&) = delete;
    BinomialTable& operator=(const BinomialTable&) = delete;

    /// C(n, k); zero when k > n.
    [[nodiscard]] BigInt operator()(unsigned n, unsigned k) const;

    /// Ensures rows 0..n exist.
    void reserve_rows(unsigned n) const;

    [[nodiscard]] std::size_t rows() const;

private:
    const std::vector<BigInt>& row(unsigned n) const;

    mutable std::shared_mutex mutex_;
    mutable std::vector<std::unique_ptr<const std::vector<BigInt>>> rows_;
};

/// Process-wide table.
BinomialTable& binomial_table();

/// C(n, k) through the shared table.
[[nodiscard]] BigInt binomial(unsigned n, unsigned k);

}  // namespace bern
