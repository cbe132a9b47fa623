#include "isg/semigroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace isg {

InverseSemigroup::InverseSemigroup(std::shared_ptr<const NaturalBasis> basis, BasisOrder order,
                                   std::vector<std::uint8_t> table)
    : basis_(std::move(basis)), order_(std::move(order)), table_(std::move(table))
{
    if (static_cast<int>(table_.size()) != size() * size())
        throw std::invalid_argument("Cayley table size does not match the basis");
}

int InverseSemigroup::d_class_size(int e) const
{
    return static_cast<int>(basis_->block(basis_->block_of_label()[e]).rows.size());
}

bool InverseSemigroup::is_commutative() const
{
    for (int s = 0; s < size(); ++s)
        for (int t = s + 1; t < size(); ++t)
            if (mul(s, t) != mul(t, s))
                return false;
    return true;
}

bool InverseSemigroup::is_monoid() const
{
    return has_maximum(semilattice());
}

std::string InverseSemigroup::cayley_text() const
{
    std::string out = "n=" + std::to_string(size()) + " e=" + std::to_string(idempotent_count()) + "\n";
    for (int s = 0; s < size(); ++s) {
        for (int t = 0; t < size(); ++t) {
            if (t)
                out += ' ';
            out += std::to_string(mul(s, t));
        }
        out += '\n';
    }
    return out;
}

int esn_multiply(const NaturalBasis& basis, const BasisOrder& order, int s, int t)
{
    int e = basis.semilattice().meet(basis.dom(s), basis.ran(t));
    int left = -1, right = -1;
    for_each_bit(order.down[s], [&](int x) {
        if (basis.dom(x) == e) {
            if (left >= 0)
                throw std::logic_error("order has two restrictions of one element");
            left = x;
        }
    });
    for_each_bit(order.down[t], [&](int x) {
        if (basis.ran(x) == e) {
            if (right >= 0)
                throw std::logic_error("order has two corestrictions of one element");
            right = x;
        }
    });
    if (left < 0 || right < 0)
        throw std::logic_error("order lacks a restriction needed for a product");
    int p = basis.product(left, right);
    if (p < 0)
        throw std::logic_error("restricted factors do not compose");
    return p;
}

InverseSemigroup esn(std::shared_ptr<const NaturalBasis> basis, const BasisOrder& order)
{
    int n = basis->size();
    std::vector<std::uint8_t> table(static_cast<std::size_t>(n) * n);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            table[s * n + t] = static_cast<std::uint8_t>(esn_multiply(*basis, order, s, t));
    return InverseSemigroup(std::move(basis), order, std::move(table));
}

bool validate_inverse_semigroup(int size, const std::vector<int>& table)
{
    if (size < 1 || static_cast<int>(table.size()) != size * size)
        return false;
    auto mul = [&](int a, int b) { return table[a * size + b]; };
    for (int v : table)
        if (v < 0 || v >= size)
            return false;
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
            for (int c = 0; c < size; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    return false;
    for (int x = 0; x < size; ++x) {
        int count = 0;
        for (int y = 0; y < size; ++y)
            if (mul(mul(x, y), x) == x && mul(mul(y, x), y) == y)
                ++count;
        if (count != 1)
            return false;
    }
    std::vector<int> idem;
    for (int x = 0; x < size; ++x)
        if (mul(x, x) == x)
            idem.push_back(x);
    for (int e : idem)
        for (int f : idem)
            if (mul(e, f) != mul(f, e))
                return false;
    return true;
}

std::vector<int> table_inverses(int size, const std::vector<int>& table)
{
    auto mul = [&](int a, int b) { return table[a * size + b]; };
    std::vector<int> inv(size, -1);
    for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y)
            if (mul(mul(x, y), x) == x && mul(mul(y, x), y) == y) {
                inv[x] = y;
                break;
            }
    return inv;
}

std::vector<Mask> natural_order_from_table(int size, const std::vector<int>& table)
{
    auto mul = [&](int a, int b) { return table[a * size + b]; };
    auto inv = table_inverses(size, table);
    std::vector<Mask> down(size, 0);
    for (int s = 0; s < size; ++s)
        for (int t = 0; t < size; ++t)
            if (mul(mul(t, inv[s]), s) == s)
                down[t] |= bit(s);
    return down;
}

std::vector<Mask> d_restriction_from_table(int size, const std::vector<int>& table)
{
    auto mul = [&](int a, int b) { return table[a * size + b]; };
    auto inv = table_inverses(size, table);
    std::vector<Mask> cls;
    std::vector<int> owner(size, -1);
    for (int x = 0; x < size; ++x) {
        int d = mul(inv[x], x), r = mul(x, inv[x]);
        int a = owner[d], b = owner[r];
        if (a < 0 && b < 0) {
            owner[d] = owner[r] = static_cast<int>(cls.size());
            cls.push_back(bit(d) | bit(r));
        } else if (a < 0 || b < 0 || a != b) {
            int keep = a >= 0 ? a : b;
            int other = a >= 0 ? b : a;
            Mask add = bit(d) | bit(r);
            if (other >= 0) {
                add |= cls[other];
                cls[other] = 0;
            }
            cls[keep] |= add;
            for_each_bit(cls[keep], [&](int y) { owner[y] = keep; });
        }
    }
    cls.erase(std::remove(cls.begin(), cls.end(), Mask{0}), cls.end());
    std::sort(cls.begin(), cls.end(), [](Mask a, Mask b) { return lowest(a) < lowest(b); });
    return cls;
}

std::vector<int> widen(const std::vector<std::uint8_t>& table)
{
    return std::vector<int>(table.begin(), table.end());
}

} // namespace isg
