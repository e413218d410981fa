// Discrete demographic state space: life stages and child counts.
#pragma once

#include <array>
#include <stdexcept>
#include <vector>

namespace marfam {

enum class AgeStage : int { Young = 0, Middle = 1, Old = 2 };
enum class Gender : int { Male = 0, Female = 1 };

inline constexpr int kNumAges = 3;
inline constexpr int kMaxChildren = 3;

inline const char* age_label(AgeStage a) {
    switch (a) {
        case AgeStage::Young: return "Y";
        case AgeStage::Middle: return "M";
        case AgeStage::Old: return "O";
    }
    return "?";
}

inline const char* gender_label(Gender g) {
    return g == Gender::Male ? "m" : "f";
}

inline Gender other(Gender g) {
    return g == Gender::Male ? Gender::Female : Gender::Male;
}

struct ChildState {
    int n0 = 0;  // children of age 0 (Young stage only)
    int n1 = 0;  // children of age 1 (Middle/Old stages)

    int total() const { return n0 + n1; }
    bool small() const { return n0 > 0; }
};

// Child states a married couple can occupy at each stage. Age 0
// children exist only before the parents reach Old; at Young no child
// has aged to 1 yet.
inline const std::vector<ChildState>& child_states(AgeStage a) {
    static const std::vector<ChildState> young = {{0, 0}, {1, 0}, {2, 0}, {3, 0}};
    static const std::vector<ChildState> middle = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0},
                                                   {1, 1}, {1, 2}, {2, 0}, {2, 1}, {3, 0}};
    static const std::vector<ChildState> old = {{0, 0}, {0, 1}, {0, 2}, {0, 3}};
    switch (a) {
        case AgeStage::Young: return young;
        case AgeStage::Middle: return middle;
        case AgeStage::Old: return old;
    }
    throw std::logic_error("bad age stage");
}

inline int child_index(AgeStage a, int n0, int n1) {
    const auto& states = child_states(a);
    for (std::size_t k = 0; k < states.size(); ++k) {
        if (states[k].n0 == n0 && states[k].n1 == n1) return static_cast<int>(k);
    }
    throw std::domain_error("child state (" + std::to_string(n0) + "," + std::to_string(n1) +
                            ") not valid at this age");
}

inline void check_child_state(AgeStage a, const ChildState& cs) {
    if (cs.n0 < 0 || cs.n1 < 0 || cs.total() > kMaxChildren) {
        throw std::domain_error("child counts out of range");
    }
    if (a == AgeStage::Young && cs.n1 != 0) {
        throw std::domain_error("age-1 children impossible at stage Y");
    }
    if (a == AgeStage::Old && cs.n0 != 0) {
        throw std::domain_error("age-0 children impossible at stage O");
    }
}

// Couples' static allocations depend on children only through
// (any small child, total count); seven distinct classes.
inline constexpr int kNumAllocClasses = 7;
inline int alloc_class(const ChildState& cs) {
    if (cs.total() == 0) return 0;
    if (!cs.small()) return cs.n1;           // 1..3: older children only
    return 3 + cs.total();                   // 4..6: small child present, total 1..3
}

}  // namespace marfam
