#include "berk/config.hpp"

#include <atomic>

#include "berk/errors.hpp"
#include "berk/rational.hpp"

namespace berk {

namespace {
std::atomic<int> g_base{2};
std::atomic<int> g_depth_cap{64};
std::atomic<int> g_precision_cap{256};
}  // namespace

int value_base() { return g_base.load(std::memory_order_relaxed); }

void set_value_base(int beta) {
    if (beta < 2) throw DomainError("value base must be >= 2");
    if (is_perfect_power(Int(beta)))
        throw DomainError("value base must not be a perfect power (got " + std::to_string(beta) + ")");
    g_base.store(beta, std::memory_order_relaxed);
}

int default_depth_cap() { return g_depth_cap.load(std::memory_order_relaxed); }

void set_default_depth_cap(int cap) {
    if (cap < 1) throw DomainError("depth cap must be positive");
    g_depth_cap.store(cap, std::memory_order_relaxed);
}

int precision_cap() { return g_precision_cap.load(std::memory_order_relaxed); }

void set_precision_cap(int cap) {
    if (cap < 1) throw DomainError("precision cap must be positive");
    g_precision_cap.store(cap, std::memory_order_relaxed);
}

}  // namespace berk
