#pragma once

#include <chrono>
#include <limits>

namespace surfmin {

class Deadline {
public:
    using clock = std::chrono::steady_clock;

    static Deadline never() { return Deadline(clock::time_point::max()); }
    static Deadline after_seconds(double s) {
        if (s <= 0 || s > 1e8) return never();
        return Deadline(clock::now() + std::chrono::duration_cast<clock::duration>(std::chrono::duration<double>(s)));
    }

    bool expired() const { return end_ != clock::time_point::max() && clock::now() >= end_; }

    // Cheap polling for hot loops: looks at the clock once every 1024 calls.
    bool poll() const {
        if (end_ == clock::time_point::max()) return false;
        if ((++counter_ & 1023u) != 0) return hit_;
        hit_ = clock::now() >= end_;
        return hit_;
    }

    // Child deadline capped by both this one and a fresh relative budget.
    Deadline capped(double s) const {
        Deadline d = after_seconds(s);
        return d.end_ < end_ ? d : *this;
    }

private:
    explicit Deadline(clock::time_point e) : end_(e) {}
    clock::time_point end_;
    mutable unsigned counter_ = 0;
    mutable bool hit_ = false;
};

}  // namespace surfmin
