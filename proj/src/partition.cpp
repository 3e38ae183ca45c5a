#include "grasscalc/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace grasscalc {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("partition has an interior zero part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::rectangle(unsigned rows, unsigned entry) {
    if (entry == 0) return {};
    return Partition(std::vector<unsigned>(rows, entry));
}

unsigned Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<unsigned> cols(parts_[0], 0);
    for (unsigned p : parts_)
        for (unsigned j = 0; j < p; ++j) ++cols[j];
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (unsigned i = 0; i < mu.length(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

std::string Partition::str() const {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

Partition add_padded(const Partition& a, const Partition& b, unsigned pad_to) {
    if (a.length() > pad_to || b.length() > pad_to)
        throw std::invalid_argument("add_padded: operand longer than pad_to");
    std::vector<unsigned> sum(pad_to, 0);
    for (unsigned i = 0; i < pad_to; ++i) sum[i] = a.part(i) + b.part(i);
    return Partition(std::move(sum));
}

std::vector<Partition> pieri_add_box(const Partition& lam, unsigned max_rows) {
    if (lam.length() > max_rows)
        throw std::invalid_argument("pieri_add_box: partition longer than max_rows");
    std::vector<Partition> out;
    // Top row first gives lexicographically decreasing output.
    for (unsigned i = 0; i < lam.length(); ++i) {
        if (i == 0 || lam.part(i) < lam.part(i - 1)) {
            auto parts = lam.parts();
            ++parts[i];
            out.emplace_back(std::move(parts));
        }
    }
    if (lam.length() < max_rows) {
        auto parts = lam.parts();
        parts.push_back(1);
        out.emplace_back(std::move(parts));
    }
    return out;
}

std::vector<Partition> remove_corner_results(const Partition& lam) {
    std::vector<Partition> out;
    for (unsigned i = 0; i < lam.length(); ++i) {
        if (i + 1 == lam.length() || lam.part(i) > lam.part(i + 1)) {
            auto parts = lam.parts();
            --parts[i];
            out.emplace_back(std::move(parts));
        }
    }
    return out;
}

BigInt syt_count_formula(const Partition& lam) {
    const unsigned q = lam.length();
    if (q <= 1) return 1;
    std::vector<unsigned> shifted(q);
    for (unsigned i = 0; i < q; ++i) shifted[i] = lam.part(i) + q - 1 - i;
    Rational acc = factorial(lam.weight());
    for (unsigned l : shifted) acc /= factorial(l);
    for (unsigned i = 0; i < q; ++i)
        for (unsigned j = i + 1; j < q; ++j) acc *= shifted[i] - shifted[j];
    if (denominator(acc) != 1)
        throw std::logic_error("syt_count_formula: non-integral result");
    return numerator(acc);
}

namespace {

// Places the next label at every admissible cell: row i can grow iff it
// is still short of lam_i and strictly shorter than row i-1.
BigInt count_fillings(const Partition& lam, std::vector<unsigned>& filled,
                      unsigned placed, unsigned total) {
    if (placed == total) return 1;
    BigInt count = 0;
    for (unsigned i = 0; i < lam.length(); ++i) {
        if (filled[i] >= lam.part(i)) continue;
        if (i > 0 && filled[i] >= filled[i - 1]) continue;
        ++filled[i];
        count += count_fillings(lam, filled, placed + 1, total);
        --filled[i];
    }
    return count;
}

}  // namespace

BigInt syt_count_bruteforce(const Partition& lam, unsigned cap) {
    const unsigned total = lam.weight();
    if (total > cap)
        throw std::invalid_argument("syt_count_bruteforce: weight " +
                                    std::to_string(total) + " exceeds cap " +
                                    std::to_string(cap));
    std::vector<unsigned> filled(lam.length(), 0);
    return count_fillings(lam, filled, 0, total);
}

namespace {

void emit_partitions(unsigned remaining, unsigned max_part, unsigned rows_left,
                     std::vector<unsigned>& current, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    if (rows_left == 0) return;
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        emit_partitions(remaining - p, p, rows_left - 1, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned weight, unsigned max_length) {
    std::vector<Partition> out;
    std::vector<unsigned> current;
    emit_partitions(weight, weight == 0 ? 1 : weight, max_length, current, out);
    return out;
}

}  // namespace grasscalc
