#include <dindex/constructive.hpp>

#include <algorithm>
#include <limits>

namespace dindex {

namespace {

// x^k compared against y without overflow.
bool pow_at_least(const BigInt& x, int k, const BigInt& y)
{
    BigInt acc = 1;
    for (int i = 0; i < k; ++i) {
        acc *= x;
        if (acc >= y)
            return true;
    }
    return acc >= y;
}

int ceil_root_big(const BigInt& x, int k)
{
    if (x <= 1)
        return x <= 0 ? 0 : 1;
    // Least t with t^k >= x: double an upper end, then bisect.
    std::int64_t lo = 1, hi = 2;
    while (! pow_at_least(BigInt(hi), k, x))
        hi *= 2;
    while (hi - lo > 1) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (pow_at_least(BigInt(mid), k, x))
            hi = mid;
        else
            lo = mid;
    }
    return static_cast<int>(hi);
}

}  // namespace

int ceil_root(std::int64_t x, int k)
{
    if (k < 1)
        throw Error("root index must be positive");
    return ceil_root_big(BigInt(x), k);
}

int paper_bound(int min_degree, int max_degree)
{
    if (min_degree < 2)
        throw Error("bound needs minimum degree >= 2");
    if (max_degree < min_degree)
        throw Error("maximum degree below minimum degree");
    return ceil_root(max_degree, min_degree) + 1;
}

int spoke_block_size(int min_degree, int max_degree)
{
    if (min_degree < 2)
        throw Error("block size needs minimum degree >= 2");
    BigInt power = 1;
    for (int i = 0; i < min_degree - 1; ++i)
        power *= max_degree;
    return ceil_root_big(power, min_degree) - 1;
}

std::int64_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::int64_t out = 1;
    for (int i = 1; i <= k; ++i) {
        // out * (n-k+i) / i stays integral at every step
        if (out > std::numeric_limits<std::int64_t>::max() / (n - k + i))
            return std::numeric_limits<std::int64_t>::max();
        out = out * (n - k + i) / i;
    }
    return out;
}

TuplePool multiset_tuple_pool(int arity, int count)
{
    if (arity < 1 || count < 1)
        throw Error("tuple pool needs arity >= 1 and count >= 1");
    TuplePool pool;
    int r = 1;
    while (binomial(arity + r - 1, r - 1) < count)
        ++r;
    pool.labels = r;

    std::vector<int> tuple(arity, 1);
    while (static_cast<int>(pool.tuples.size()) < count) {
        pool.tuples.push_back(tuple);
        // next non-decreasing sequence over 1..r
        int i = arity - 1;
        while (i >= 0 && tuple[i] == r)
            --i;
        if (i < 0)
            break;
        int v = tuple[i] + 1;
        for (int k = i; k < arity; ++k)
            tuple[k] = v;
    }
    return pool;
}

}  // namespace dindex
