#include "rde/expansion.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rde::expansion {

namespace {

// Instantiation cache shared across one expansion run.
struct InstanceCache {
    std::vector<HandlePtr>* families;
    std::map<std::pair<int, int>, Matrix> cache;

    const Matrix& get(int fid, int n) {
        auto key = std::make_pair(fid, n);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, (*families)[fid - 1]->instantiate(n)).first;
        return it->second;
    }
};

char expansion_mode(const Matrix& m) {
    int colnz = 0, rownz = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i][0] != 0) ++colnz;
        if (m[0][i] != 0) ++rownz;
    }
    // Strictly fewer first-column nonzeros selects column mode; ties go to
    // the first row.
    return colnz < rownz ? 'C' : 'R';
}

}  // namespace

ExpansionResult laplace_expand(HandlePtr root, int min_size, int family_cap) {
    ExpansionResult res;
    res.min_size = min_size;
    res.families.push_back(std::move(root));
    InstanceCache inst{&res.families, {}};

    std::set<int> pending{1};
    std::map<int, std::size_t> ledger_row_of;
    res.ledger.push_back(LedgerRow{1, 1, expansion_mode(inst.get(1, min_size)), 0, 0, 0, {}});
    ledger_row_of[1] = 0;

    while (!pending.empty()) {
        int parent = *pending.begin();
        char mode = expansion_mode(inst.get(parent, min_size));
        // Copy: later cache insertions may invalidate the reference.
        Matrix mp = inst.get(parent, min_size);
        for (int i = 1; i <= min_size; ++i) {
            const Int& entry = mode == 'R' ? mp[0][i - 1] : mp[i - 1][0];
            if (entry == 0) continue;
            int dr = mode == 'R' ? 1 : i;
            int dc = mode == 'R' ? i : 1;
            HandlePtr child = families::make_derived(res.families[parent - 1], dr, dc);
            Matrix probes[4];
            for (int k = 0; k < 4; ++k) probes[k] = child->instantiate(min_size + k);

            int found = 0;
            // Reference semantics: the repeated-family probe is only
            // well-formed in column mode or for the first cofactor, and only
            // families up to the parent id are scanned.  Both quirks are
            // load-bearing for reproducing the reference ledgers.
            if (mode == 'C' || i == 1) {
                for (int j = 1; j <= parent && !found; ++j) {
                    bool direct = true, transposed = true;
                    for (int k = 0; k < 4 && (direct || transposed); ++k) {
                        const Matrix& other = inst.get(j, min_size + k);
                        if (probes[k] != other) direct = false;
                        if (probes[k] != transpose(other)) transposed = false;
                    }
                    if (direct || transposed) found = j;
                }
            }

            Int signed_entry = (i % 2 == 1) ? entry : Int(-entry);
            ShiftPoly coeff(std::vector<Int>{Int(0), signed_entry});
            if (found) {
                res.ledger.push_back(LedgerRow{found, 0, '0', parent, dr, dc, coeff});
            } else {
                res.families.push_back(child);
                int fid = static_cast<int>(res.families.size());
                if (fid > family_cap)
                    throw std::runtime_error(
                        "laplace_expand: family cap exceeded (convergence guard)");
                for (int k = 0; k < 4; ++k)
                    inst.cache.emplace(std::make_pair(fid, min_size + k), probes[k]);
                res.ledger.push_back(
                    LedgerRow{fid, 1, expansion_mode(probes[0]), parent, dr, dc, coeff});
                ledger_row_of[fid] = res.ledger.size() - 1;
                pending.insert(fid);
            }
        }
        pending.erase(parent);
        res.ledger[ledger_row_of[parent]].pending = 0;
    }

    res.Q = ledger_to_Q(res.ledger, static_cast<int>(res.families.size()));
    return res;
}

PolyMatrix ledger_to_Q(const std::vector<LedgerRow>& ledger, int num_families) {
    PolyMatrix q(num_families, std::vector<ShiftPoly>(num_families));
    for (const auto& row : ledger) {
        if (row.parent == 0) continue;  // root row carries no identity term
        auto& cell = q[row.parent - 1][row.id - 1];
        cell = shift_poly::add(cell, row.coeff);
    }
    return q;
}

std::string ledger_text(const std::vector<LedgerRow>& ledger) {
    std::ostringstream out;
    for (const auto& row : ledger) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%3d %d %c %3d %d %d  ", row.id, row.pending, row.mode,
                      row.parent, row.del_row, row.del_col);
        out << buf << shift_poly::to_string(row.coeff) << '\n';
    }
    return out.str();
}

}  // namespace rde::expansion
