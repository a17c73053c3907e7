#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rde/numeric.hpp"

namespace rde::families {

// One diagonal of a family: explicit head and tail overrides around a
// periodic core.  Tail overrides win where head and tail overlap.
struct Pattern {
    std::vector<long> head;
    std::vector<long> core;
    std::vector<long> tail;

    // Value at 1-based position j of a length-L vector.
    long at(long j, long L) const;
};

// Fixed entry at (row, col); negative indices count from the end
// (-1 = last).  Applied symmetrically after everything else.
struct Corner {
    int row;
    int col;
    long value;
};

enum class DenomStrategy {
    // Banded family: the numerator's system annihilator also annihilates
    // the denominator (the Step 4 shortcut).
    shared_banded,
    // Run expansion + reduction separately on the denominator handle.
    separate_expand,
    // Manual fixture (wheel): the (-1)^n case the engine does not automate.
    manual_fixture,
};

struct FamilySpec {
    std::string name;
    // Empty diag => diagonal is set to minus the off-diagonal row sum
    // (pure Laplacian of the encoded adjacency).
    std::optional<Pattern> diag;
    std::map<int, Pattern> offdiags;  // offset k >= 1, applied symmetrically
    bool border = false;              // dense -1 last row/col, corner n-1
    std::vector<Corner> corners;
    int min_size = 3;

    // Odd-size policy for the Bapat numerator handle: when true, the odd-n
    // instance is the leading n x n block of the pattern instance at n+1.
    // Needed for families (ladder) whose pattern period is 2.
    bool numerator_odd_truncate = false;
    DenomStrategy denom_strategy = DenomStrategy::shared_banded;
    // Default denominator corner: delete row/col 1 or n.
    bool denom_last = false;

    // The n x n member.  With odd_truncate set, odd n is realized by
    // truncating the (n+1)-size instance.
    Matrix instantiate(int n, bool odd_truncate = false) const;
};

using SpecPtr = std::shared_ptr<const FamilySpec>;

// A rule producing the n x n member of a (possibly derived) matrix family.
struct FamilyHandle;
using HandlePtr = std::shared_ptr<const FamilyHandle>;

struct FamilyHandle {
    // Root: n -> spec(n + offset) with the listed rows/cols deleted
    // (negative indices count from the end of the enlarged matrix).
    SpecPtr spec;
    std::vector<int> del_rows;
    std::vector<int> del_cols;
    int offset = 0;
    bool odd_truncate = false;

    // Derived: n -> parent(n + 1) with row r, col c removed (1-based).
    HandlePtr parent;
    int r = 0;
    int c = 0;

    int min_size = 1;

    bool is_root() const { return spec != nullptr; }
    Matrix instantiate(int n) const;
};

HandlePtr make_root(SpecPtr spec, std::vector<int> del_rows, std::vector<int> del_cols,
                    int offset, bool odd_truncate = false);
HandlePtr make_derived(HandlePtr parent, int r, int c);

enum class DenomChoice { first, last, auto_pick };

struct BapatHandles {
    HandlePtr numerator;    // n -> L^{n+2}({1,n+2}|{1,n+2})
    HandlePtr denominator;  // n -> L^{n+1}(1|1) or L^{n+1}(n+1|n+1)
    bool denom_is_last = false;
};

BapatHandles bapat_handles(SpecPtr spec, DenomChoice choice = DenomChoice::auto_pick);

struct LineProfile {
    int row_nonzeros = 0;
    int col_nonzeros = 0;
    std::vector<Int> row;
    std::vector<Int> col;
};

LineProfile first_line_profile(const FamilyHandle& h, int probe_size);

// Sampled equality at sizes min_size..min_size+3, directly or under
// transpose (consistently one or the other across all four probes).
bool families_equal(const FamilyHandle& a, const FamilyHandle& b, int min_size);

// Built-in registry.
SpecPtr find_spec(const std::string& name);
std::vector<std::string> builtin_names();

// Declarative config (JSON text mirroring FamilySpec fields).
SpecPtr spec_from_json_text(const std::string& json_text);

}  // namespace rde::families
