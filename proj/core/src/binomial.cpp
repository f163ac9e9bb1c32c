#include "bern/binomial.hpp"

#include <mutex>

namespace bern {

void BinomialTable::reserve_rows(unsigned n) const {
    {
        std::shared_lock lock(mutex_);
        if (rows_.size() > n) return;
    }
    std::unique_lock lock(mutex_);
    if (rows_.empty()) rows_.push_back(std::make_unique<const std::vector<BigInt>>(1, BigInt(1)));
    while (rows_.size() <= n) {
        const auto& prev = *rows_.back();
        std::vector<BigInt> next(prev.size() + 1);
        next.front() = 1;
        next.back() = 1;
        for (std::size_t k = 1; k + 1 < next.size(); ++k) next[k] = prev[k - 1] + prev[k];
        rows_.push_back(std::make_unique<const std::vector<BigInt>>(std::move(next)));
    }
}

const std::vector<BigInt>& BinomialTable::row(unsigned n) const {
    reserve_rows(n);
    std::shared_lock lock(mutex_);
    return *rows_[n];
}

BigInt BinomialTable::operator()(unsigned n, unsigned k) const {
    if (k > n) return 0;
    return row(n)[k];
}

std::size_t BinomialTable::rows() const {
    std::shared_lock lock(mutex_);
    return rows_.size();
}

BinomialTable& binomial_table() {
    static BinomialTable table;
    return table;
}

BigInt binomial(unsigned n, unsigned k) { return binomial_table()(n, k); }

}  // namespace bern
