#include "rde/families.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rde::families {

long Pattern::at(long j, long L) const {
    bool set = false;
    long v = 0;
    if (j >= 1 && j <= static_cast<long>(head.size())) {
        v = head[j - 1];
        set = true;
    }
    long tail_from = L - static_cast<long>(tail.size());
    if (j > tail_from) {
        // Tail overrides win over head where the two overlap.
        v = tail[j - tail_from - 1];
        set = true;
    }
    if (!set) v = core.empty() ? 0 : core[(j - static_cast<long>(head.size()) - 1) % core.size()];
    return v;
}

Matrix FamilySpec::instantiate(int n, bool odd_truncate) const {
    if (n < 0) throw std::invalid_argument("FamilySpec::instantiate: negative size");
    if (odd_truncate && n % 2 == 1) {
        Matrix big = instantiate(n + 1, false);
        Matrix m(n, std::vector<Int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = big[i][j];
        return m;
    }
    Matrix m(n, std::vector<Int>(n, Int(0)));
    if (diag)
        for (int i = 1; i <= n; ++i) m[i - 1][i - 1] = diag->at(i, n);
    for (const auto& [k, pat] : offdiags) {
        for (int j = 1; j <= n - k; ++j) {
            long v = pat.at(j, n - k);
            m[j - 1][j - 1 + k] = v;
            m[j - 1 + k][j - 1] = v;
        }
    }
    if (border && n >= 1) {
        for (int i = 1; i < n; ++i) {
            m[i - 1][n - 1] = -1;
            m[n - 1][i - 1] = -1;
        }
        m[n - 1][n - 1] = n - 1;
    }
    if (!diag) {
        for (int i = 0; i < n; ++i) {
            Int s = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) s += m[i][j];
            m[i][i] = -s;
        }
    }
    for (const auto& corner : corners) {
        int rr = corner.row > 0 ? corner.row : n + 1 + corner.row;
        int cc = corner.col > 0 ? corner.col : n + 1 + corner.col;
        if (rr < 1 || rr > n || cc < 1 || cc > n) continue;
        m[rr - 1][cc - 1] = corner.value;
        m[cc - 1][rr - 1] = corner.value;
    }
    return m;
}

Matrix FamilyHandle::instantiate(int n) const {
    if (is_root()) {
        int N = n + offset;
        Matrix m = spec->instantiate(N, odd_truncate);
        std::set<int> rows, cols;
        for (int r0 : del_rows) rows.insert(r0 > 0 ? r0 : N + 1 + r0);
        for (int c0 : del_cols) cols.insert(c0 > 0 ? c0 : N + 1 + c0);
        Matrix out;
        for (int i = 1; i <= N; ++i) {
            if (rows.count(i)) continue;
            std::vector<Int> row;
            for (int j = 1; j <= N; ++j)
                if (!cols.count(j)) row.push_back(m[i - 1][j - 1]);
            out.push_back(std::move(row));
        }
        return out;
    }
    Matrix p = parent->instantiate(n + 1);
    Matrix out;
    for (int i = 1; i <= static_cast<int>(p.size()); ++i) {
        if (i == r) continue;
        std::vector<Int> row;
        for (int j = 1; j <= static_cast<int>(p.size()); ++j)
            if (j != c) row.push_back(p[i - 1][j - 1]);
        out.push_back(std::move(row));
    }
    return out;
}

HandlePtr make_root(SpecPtr spec, std::vector<int> del_rows, std::vector<int> del_cols,
                    int offset, bool odd_truncate) {
    auto h = std::make_shared<FamilyHandle>();
    h->spec = std::move(spec);
    h->del_rows = std::move(del_rows);
    h->del_cols = std::move(del_cols);
    h->offset = offset;
    h->odd_truncate = odd_truncate;
    h->min_size = 1;
    return h;
}

HandlePtr make_derived(HandlePtr parent, int r, int c) {
    auto h = std::make_shared<FamilyHandle>();
    h->parent = std::move(parent);
    h->r = r;
    h->c = c;
    h->min_size = 1;
    return h;
}

BapatHandles bapat_handles(SpecPtr spec, DenomChoice choice) {
    BapatHandles out;
    out.numerator = make_root(spec, {1, -1}, {1, -1}, 2, spec->numerator_odd_truncate);
    bool last = choice == DenomChoice::last ||
                (choice == DenomChoice::auto_pick && spec->denom_last);
    out.denom_is_last = last;
    if (last)
        out.denominator = make_root(spec, {-1}, {-1}, 1);
    else
        out.denominator = make_root(spec, {1}, {1}, 1);
    return out;
}

LineProfile first_line_profile(const FamilyHandle& h, int probe_size) {
    Matrix m = h.instantiate(probe_size);
    if (m.empty()) throw std::invalid_argument("first_line_profile: empty instance");
    LineProfile p;
    for (std::size_t j = 0; j < m.size(); ++j) {
        p.row.push_back(m[0][j]);
        p.col.push_back(m[j][0]);
        if (m[0][j] != 0) ++p.row_nonzeros;
        if (m[j][0] != 0) ++p.col_nonzeros;
    }
    return p;
}

bool families_equal(const FamilyHandle& a, const FamilyHandle& b, int min_size) {
    bool direct = true, transposed = true;
    for (int k = 0; k < 4 && (direct || transposed); ++k) {
        Matrix ma = a.instantiate(min_size + k);
        Matrix mb = b.instantiate(min_size + k);
        if (ma != mb) direct = false;
        if (ma != transpose(mb)) transposed = false;
    }
    return direct || transposed;
}

namespace {

SpecPtr build(FamilySpec s) { return std::make_shared<FamilySpec>(std::move(s)); }

const std::map<std::string, SpecPtr>& registry() {
    static const std::map<std::string, SpecPtr> reg = [] {
        std::map<std::string, SpecPtr> r;

        FamilySpec path;
        path.name = "path";
        path.diag = Pattern{{1}, {2}, {1}};
        path.offdiags[1] = Pattern{{}, {-1}, {}};
        path.min_size = 3;
        r["path"] = build(path);

        FamilySpec t2;
        t2.name = "linear2tree";
        t2.diag = Pattern{{2, 3}, {4}, {3, 2}};
        t2.offdiags[1] = Pattern{{}, {-1}, {}};
        t2.offdiags[2] = Pattern{{}, {-1}, {}};
        t2.min_size = 5;
        r["linear2tree"] = build(t2);

        FamilySpec t3;
        t3.name = "linear3tree";
        t3.diag = Pattern{{3, 4, 5}, {6}, {5, 4, 3}};
        t3.offdiags[1] = Pattern{{}, {-1}, {}};
        t3.offdiags[2] = Pattern{{}, {-1}, {}};
        t3.offdiags[3] = Pattern{{}, {-1}, {}};
        t3.min_size = 8;
        r["linear3tree"] = build(t3);

        FamilySpec ladder;
        ladder.name = "ladder";
        ladder.diag = Pattern{{2, 2}, {3}, {2, 2}};
        ladder.offdiags[1] = Pattern{{-1, 0}, {-1, 0}, {0, -1}};
        ladder.offdiags[2] = Pattern{{}, {-1}, {}};
        ladder.min_size = 5;
        // Period-2 pattern: odd-size numerator minors are leading blocks of
        // the next even instance so parity does not shift the rung phase.
        ladder.numerator_odd_truncate = true;
        r["ladder"] = build(ladder);

        FamilySpec fan;
        fan.name = "fan";
        fan.diag = Pattern{{2}, {3}, {2, 0}};
        fan.offdiags[1] = Pattern{{}, {-1}, {}};
        fan.border = true;
        fan.min_size = 4;
        fan.denom_strategy = DenomStrategy::separate_expand;
        fan.denom_last = true;  // L(n|n) is banded, L(1|1) is not
        r["fan"] = build(fan);

        FamilySpec wheel;
        wheel.name = "wheel";
        wheel.diag = Pattern{{3}, {3}, {0}};
        wheel.offdiags[1] = Pattern{{}, {-1}, {}};
        wheel.border = true;
        wheel.corners.push_back(Corner{1, -2, -1});  // rim closes into a cycle
        wheel.min_size = 4;
        wheel.denom_strategy = DenomStrategy::manual_fixture;
        wheel.denom_last = true;
        r["wheel"] = build(wheel);

        FamilySpec corr;
        corr.name = "corrugated2tree";
        corr.offdiags[1] = Pattern{{}, {-1}, {}};
        corr.offdiags[2] = Pattern{{-1, -1, -1, 0}, {-1, 0, 0}, {}};
        corr.offdiags[3] = Pattern{{0, 0, -1, 0}, {-1, 0, 0}, {}};
        corr.offdiags[4] = Pattern{{0, 0, 0, 0}, {-1, 0, 0}, {}};
        corr.min_size = 9;
        r["corrugated2tree"] = build(corr);

        return r;
    }();
    return reg;
}

Pattern pattern_from_json(const nlohmann::json& j) {
    Pattern p;
    p.head = j.value("head", std::vector<long>{});
    p.core = j.value("core", std::vector<long>{});
    p.tail = j.value("tail", std::vector<long>{});
    return p;
}

}  // namespace

SpecPtr find_spec(const std::string& name) {
    auto it = registry().find(name);
    return it == registry().end() ? nullptr : it->second;
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : registry()) names.push_back(k);
    return names;
}

SpecPtr spec_from_json_text(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    FamilySpec s;
    s.name = j.at("name").get<std::string>();
    if (j.contains("diag") && !j["diag"].is_null()) s.diag = pattern_from_json(j["diag"]);
    if (j.contains("offdiags"))
        for (const auto& [k, v] : j["offdiags"].items())
            s.offdiags[std::stoi(k)] = pattern_from_json(v);
    s.border = j.value("border", false);
    if (j.contains("corners"))
        for (const auto& c : j["corners"])
            s.corners.push_back(Corner{c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<long>()});
    s.min_size = j.value("min_size", 3);
    s.numerator_odd_truncate = j.value("numerator_odd_truncate", false);
    s.denom_last = j.value("denom_last", false);
    std::string strat = j.value("denom_strategy", "shared_banded");
    if (strat == "shared_banded")
        s.denom_strategy = DenomStrategy::shared_banded;
    else if (strat == "separate_expand")
        s.denom_strategy = DenomStrategy::separate_expand;
    else if (strat == "manual_fixture")
        s.denom_strategy = DenomStrategy::manual_fixture;
    else
        throw std::invalid_argument("unknown denom_strategy: " + strat);
    return build(std::move(s));
}

}  // namespace rde::families
