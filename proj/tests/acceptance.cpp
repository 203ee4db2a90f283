// acceptance - one line per acceptance criterion; exit status 1 if any fails
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "suites.hpp"

using namespace rjd::suites;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

std::size_t count_status(const Report& r, const std::string& prefix, const std::string& status) {
    std::size_t n = 0;
    for (auto& c : r.checks) n += starts_with(c.id, prefix) && c.status == status;
    return n;
}

// every check under prefix has one of the allowed statuses
void all_of(Outcome& o, const Report& r, const std::string& prefix, std::vector<std::string> allowed = {"pass"}) {
    std::size_t seen = 0;
    for (auto& c : r.checks) {
        if (!starts_with(c.id, prefix)) continue;
        ++seen;
        bool fine = std::find(allowed.begin(), allowed.end(), c.status) != allowed.end();
        o.require(fine, c.id + " is " + c.status + ": " + c.actual);
    }
    o.require(seen > 0, "no checks under " + prefix);
}

void expect(Outcome& o, const Report& r, const std::string& id, const std::string& status = "pass") {
    auto* c = r.find(id);
    o.require(c != nullptr, id + " missing");
    if (c) o.require(c->status == status, id + " is " + c->status + ": " + c->actual);
}

double timed(const std::function<void()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    SuiteConfig defaults;
    SuiteConfig k4;
    k4.field_ext = 4;
    int failed = 0;
    auto line = [&](int n, const std::string& name, const Outcome& o, double secs) {
        std::printf("%s criterion %2d %-28s %6.1fs%s%s\n", o.ok ? "PASS" : "FAIL", n, name.c_str(), secs,
                    o.detail.empty() ? "" : "  ", o.detail.c_str());
        std::fflush(stdout);
        failed += !o.ok;
    };

    Report pres, dtilde;
    {
        Outcome o;
        double s = timed([&] { pres = run_suite("presentations", defaults); });
        for (std::string id : {"dim/um", "dim/H", "dim/Hstar", "dim/DH", "dim/K", "dim/basic", "dim/quiverQI",
                               "confluence/um", "confluence/H", "confluence/Hstar", "confluence/DH",
                               "confluence/quiverQI"})
            expect(o, pres, id);
        o.require(s < 30, "runtime over 30 s");
        line(1, "dimensions and confluence", o, s);
    }
    {
        Outcome o;
        double s = timed([&] { dtilde = run_suite("dtilde", defaults); });
        all_of(o, pres, "identity/", {"bounded-evidence"});
        all_of(o, dtilde, "identity/", {"bounded-evidence", "unverified"});
        std::size_t items = count_status(dtilde, "identity/", "unverified");
        for (auto& c : dtilde.checks)
            if (c.status == "unverified") o.require(!c.witness.empty(), c.id + " discrepancy not itemized");
        o.require(s < 60, "runtime over 60 s");
        if (o.ok) o.detail = std::to_string(items) + " xi/zeta discrepancies itemized";
        line(2, "consequence identities", o, s);
    }
    {
        Outcome o;
        Report r;
        double s = timed([&] { r = run_suite("hopf-axioms", defaults); });
        all_of(o, r, "axioms/");
        all_of(o, r, "antipode/");
        o.require(s < 120, "runtime over 2 min");
        line(3, "Hopf axioms and antipode", o, s);
    }
    {
        Outcome o;
        Report r;
        double s = timed([&] { r = run_suite("sequence-2-7", defaults); });
        all_of(o, r, "sequence/");
        expect(o, r, "kernel-dim");
        expect(o, r, "K-local");
        expect(o, r, "integrals/DH");
        line(4, "exact sequence and integrals", o, s);
    }
    {
        Outcome o;
        Report r;
        double s = timed([&] { r = run_suite("simples", defaults); });
        expect(o, r, "um/simples");
        expect(o, r, "DH/simples");
        expect(o, r, "small-search/dim2");
        o.require(r.ok(), "a simples check failed");
        line(5, "simple modules", o, s);
    }
    {
        Outcome o;
        Report r;
        double s = timed([&] { r = run_suite("ext-table", defaults); });
        o.require(r.checks.size() == 4, "expected four checks");
        std::string got;
        for (auto& c : r.checks) got += c.actual;
        o.require(got == "0220", "Ext table " + got);
        all_of(o, r, "ext/");
        line(6, "Ext table (0,2,2,0)", o, s);
    }
    {
        Outcome o;
        Report r;
        double s = timed([&] { r = run_suite("projectives", defaults); });
        all_of(o, r, "idempotent/");
        for (std::string p : {"M/", "N/"})
            for (std::string id : {"projective-iso", "composition-series", "socle", "radical", "biserial-witness"})
                expect(o, r, p + id);
        o.require(r.ok(), "a projectives check failed");
        line(7, "projectives M and N", o, s);
    }
    {
        Outcome o;
        Report r;
        double s = timed([&] { r = run_suite("basic-quiver", defaults); });
        for (std::string id : {"jacobson", "jacobson-squared", "phi/relations", "phi/bijective", "psi/anti-multiplicative"})
            expect(o, r, id);
        line(8, "basic algebra and quiver", o, s);
    }
    {
        Outcome o;
        Report r;
        double s = timed([&] { r = run_suite("strings-bands", defaults); });
        expect(o, r, "strings/length-10");
        expect(o, r, "bands/classes");
        line(9, "strings and bands", o, s);
    }
    {
        Outcome o;
        Report z, d;
        double s = timed([&] {
            z = run_suite("zoo", k4);
            d = run_suite("duality", k4);
        });
        all_of(o, z, "classification/");
        expect(o, d, "duality-table");
        expect(o, d, "twist/chevalley");
        o.require(z.ok() && d.ok(), "a zoo or duality check failed");
        o.require(s < 300, "runtime over 5 min");
        line(10, "module zoo over GF(16)", o, s);
    }
    {
        Outcome o;
        Report g;
        double s = timed([&] { g = run_suite("diagram-5-10", defaults); });
        for (std::string id : {"confluence", "morphism/pr", "morphism/pi", "N/commutative", "N/normal",
                               "N/coproduct-closed"})
            expect(o, dtilde, id);
        expect(o, dtilde, "pairing/axioms", "bounded-evidence");
        for (std::string p : {"middle-row/", "left-column/"}) {
            expect(o, g, p + "maps");
            expect(o, g, p + "coinvariants", "bounded-evidence");
            expect(o, g, p + "injective", "bounded-evidence");
        }
        all_of(o, g, "square/");
        o.require(g.ok(), "a diagram check failed");
        line(11, "infinite covers and diagram", o, s);
    }
    std::printf("%d of 11 criteria failed\n", failed);
    return failed ? 1 : 0;
}
