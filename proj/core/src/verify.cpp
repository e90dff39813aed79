#include "stringc/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>
#include <thread>
#include <utility>

#include "stringc/errors.hpp"
#include "stringc/families.hpp"
#include "stringc/snf.hpp"

namespace stringc {
namespace {

using ordered_json = nlohmann::ordered_json;

// One grid point, prepared up front and executed by the runner. The body
// returns the observed string and may fill `cert` for the corpus sink.
struct PointTask {
    std::string claim;
    ordered_json params;
    std::string expected;
    std::string suite;
    std::function<std::string(Certificate* cert)> body;
};

struct PointResult {
    ClaimReport report;
    bool has_cert = false;
    Certificate cert;
};

PointResult run_one(const PointTask& task) {
    PointResult result;
    result.report.claim = task.claim;
    result.report.params = task.params;
    result.report.expected = task.expected;
    auto start = std::chrono::steady_clock::now();
    try {
        Certificate cert;
        std::string observed = task.body(&cert);
        result.report.observed = std::move(observed);
        result.report.pass = (result.report.observed == result.report.expected);
        if (!task.suite.empty()) {
            result.has_cert = true;
            result.cert = std::move(cert);
        }
    } catch (const LimitExceeded& e) {
        result.report.observed = std::string("limit: ") + e.what();
        result.report.pass = false;
    } catch (const Error& e) {
        result.report.observed = std::string("error: ") + e.what();
        result.report.pass = false;
    }
    auto stop = std::chrono::steady_clock::now();
    result.report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return result;
}

// Executes tasks (in a pool of `jobs` threads when asked) and emits reports
// and remembered certificates in task order regardless of scheduling.
std::vector<ClaimReport> run_tasks(const std::vector<PointTask>& tasks, int jobs,
                                   std::vector<CertifiedPoint>* sink) {
    std::vector<PointResult> results(tasks.size());
    if (jobs <= 1 || tasks.size() <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = run_one(tasks[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                results[i] = run_one(tasks[i]);
            }
        };
        std::vector<std::thread> pool;
        std::size_t width = std::min<std::size_t>(static_cast<std::size_t>(jobs), tasks.size());
        pool.reserve(width);
        for (std::size_t i = 0; i < width; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    std::vector<ClaimReport> reports;
    reports.reserve(results.size());
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (sink != nullptr && results[i].has_cert && results[i].report.pass)
            sink->push_back({tasks[i].suite, tasks[i].params, results[i].cert});
        reports.push_back(std::move(results[i].report));
    }
    return reports;
}

std::string type_str(const std::vector<std::uint64_t>& type) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < type.size(); ++i) {
        if (i > 0) out << ',';
        out << type[i];
    }
    out << ')';
    return out.str();
}

std::string cert_signature(const Certificate& c) {
    std::ostringstream out;
    out << "order=" << c.order << " type=" << type_str(c.schlafli)
        << " sggi=" << (c.is_sggi ? 1 : 0)
        << " intersection=" << (c.intersection_ok ? 1 : 0)
        << " degenerate=" << (c.degenerate ? 1 : 0)
        << " solvable=" << (c.solvable ? 1 : 0);
    return out.str();
}

std::string expect_signature(std::uint64_t order, std::uint64_t k1, std::uint64_t k2,
                             bool degenerate) {
    std::ostringstream out;
    out << "order=" << order << " type=(" << k1 << ',' << k2 << ')'
        << " sggi=1 intersection=1 degenerate=" << (degenerate ? 1 : 0)
        << " solvable=1";
    return out.str();
}

bool is_odd_prime(std::uint64_t n) {
    if (n < 3 || n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t pow2(unsigned e) { return std::uint64_t{1} << e; }

std::vector<PointTask> prop21_tasks(const VerifyOptions& opts) {
    std::vector<PointTask> tasks;
    for (std::uint64_t k = 2; k <= 16; ++k) {
        for (int variant = 1; variant <= 2; ++variant) {
            ordered_json params{{"k", k}, {"variant", variant}};
            std::uint64_t k1 = variant == 1 ? k : 2;
            std::uint64_t k2 = variant == 1 ? 2 : k;
            EnumerationLimits limits = opts.limits;
            tasks.push_back({"prop21.cert", params, expect_signature(4 * k, k1, k2, true),
                             "prop21", [k, variant, limits](Certificate* cert) {
                                 *cert = certify(build_degenerate(k, variant), limits);
                                 return cert_signature(*cert);
                             }});
        }
    }
    return tasks;
}

std::vector<PointTask> prop23_tasks(const VerifyOptions& opts) {
    std::vector<PointTask> tasks;
    for (std::uint64_t b = 2; b <= 6; ++b) {
        for (int variant = 1; variant <= 2; ++variant) {
            ordered_json params{{"b", b}, {"variant", variant}};
            std::uint64_t order = (variant == 1 ? 8 : 16) * b * b;
            EnumerationLimits limits = opts.limits;
            tasks.push_back({"prop23.cert", params, expect_signature(order, 4, 4, false),
                             "prop23", [b, variant, limits](Certificate* cert) {
                                 *cert = certify(build_type44(b, variant), limits);
                                 return cert_signature(*cert);
                             }});
        }
    }
    return tasks;
}

std::vector<PointTask> theorem4_tasks(const VerifyOptions& opts) {
    std::vector<PointTask> tasks;
    for (unsigned s = 2; s <= 3; ++s) {
        for (unsigned t = 2; t <= 3; ++t) {
            for (std::uint64_t l1 : {1, 3, 5}) {
                for (std::uint64_t l2 : {1, 3}) {
                    for (unsigned n = s + t + 1; n <= s + t + 4; ++n) {
                        ordered_json params{
                            {"n", n}, {"s", s}, {"t", t}, {"l1", l1}, {"l2", l2}};
                        EnumerationLimits limits = opts.limits;
                        tasks.push_back(
                            {"thm4.cert", params,
                             expect_signature(pow2(n) * l1 * l2, pow2(s) * l1,
                                              pow2(t) * l2, false),
                             "thm4", [n, s, t, l1, l2, limits](Certificate* cert) {
                                 *cert = certify(build_type1(n, s, t, l1, l2), limits);
                                 return cert_signature(*cert);
                             }});

                        std::ostringstream want;
                        want << "order1=" << pow2(n - s + 2) * l2
                             << " order2=" << pow2(n - s - t + 4) << " hom=1";
                        tasks.push_back(
                            {"thm4.chain", params, want.str(), "",
                             [n, s, t, l1, l2, limits](Certificate*) {
                                 Presentation g = build_type1(n, s, t, l1, l2);
                                 auto [g1, g2] = build_type1_chain(n, s, t, l1, l2);
                                 CosetTable t1 = CosetTable::enumerate(g1, {}, limits);
                                 CosetTable t2 = CosetTable::enumerate(g2, {}, limits);
                                 bool hom = true;
                                 for (const Word& r : g.relators())
                                     hom = hom && t1.trace(0, r) == 0;
                                 for (const Word& r : g1.relators())
                                     hom = hom && t2.trace(0, r) == 0;
                                 std::ostringstream got;
                                 got << "order1=" << t1.size() << " order2=" << t2.size()
                                     << " hom=" << (hom ? 1 : 0);
                                 return got.str();
                             }});
                    }
                }
            }
        }
    }
    return tasks;
}

std::vector<PointTask> theorem5_tasks(const VerifyOptions& opts) {
    std::vector<PointTask> tasks;
    auto point = [&](int family, std::uint64_t m) {
        ordered_json params{{"family", family_tag(family)}, {"m", m}};
        std::uint64_t order = 192 * pow2(static_cast<unsigned>(family - 1)) * m * m * m;
        EnumerationLimits limits = opts.limits;
        tasks.push_back({"thm5.cert", params, expect_signature(order, 6, 6, false),
                         "thm5", [family, m, limits](Certificate* cert) {
                             *cert = certify(build_type2(family, m), limits);
                             return cert_signature(*cert);
                         }});
    };
    for (std::uint64_t m = 1; m <= 2; ++m)
        for (int family = 1; family <= 3; ++family) point(family, m);
    point(1, 3);
    return tasks;
}

std::vector<PointTask> subgroup_tasks(const VerifyOptions& opts) {
    std::vector<PointTask> tasks;
    for (int family = 1; family <= 3; ++family) {
        ordered_json params{{"family", family_tag(family)}};
        std::uint64_t index = 192 * pow2(static_cast<unsigned>(family - 1));
        std::ostringstream want;
        want << "index=" << index << " normal=1 rank=3 torsion=[]";
        EnumerationLimits limits = opts.limits;
        tasks.push_back({"subgroups.structure", params, want.str(), "",
                         [family, limits](Certificate*) {
                             Presentation u = build_U();
                             SubgroupSpec spec = subgroup_generators(family);
                             CosetTable table =
                                 CosetTable::enumerate(u, spec.generators, limits);
                             bool normal = true;
                             for (const Word& w : spec.generators)
                                 normal = normal && table.acts_trivially(w);
                             IntMatrix relations = table.abelianized_subgroup_relations(u);
                             AbelianInvariants inv = abelian_invariants(relations);
                             std::ostringstream got;
                             got << "index=" << table.size()
                                 << " normal=" << (normal ? 1 : 0) << " rank=" << inv.free_rank
                                 << " torsion=[";
                             for (std::size_t i = 0; i < inv.torsion.size(); ++i) {
                                 if (i > 0) got << ',';
                                 got << inv.torsion[i];
                             }
                             got << ']';
                             return got.str();
                         }});
    }
    return tasks;
}

std::vector<PointTask> cor52_tasks(const VerifyOptions& opts) {
    std::vector<PointTask> tasks;
    for (unsigned n = 6; n <= 9; ++n) {
        ordered_json params{{"n", n}};
        EnumerationLimits limits = opts.limits;
        tasks.push_back({"cor52.cert", params, expect_signature(3 * pow2(n), 6, 6, false),
                         "", [n, limits](Certificate*) {
                             Type2Point point = type2_for_exponent(n);
                             Certificate c = certify(build_type2(point.family, point.m), limits);
                             return cert_signature(c);
                         }});
    }
    return tasks;
}

std::vector<PointTask> divisibility_tasks(const std::vector<CertifiedPoint>& corpus) {
    std::vector<PointTask> tasks;
    for (const CertifiedPoint& point : corpus) {
        std::uint64_t odd = point.cert.order;
        while (odd != 0 && odd % 2 == 0) odd /= 2;
        if (!is_odd_prime(odd)) continue;
        ordered_json params{{"suite", point.suite}, {"p", odd}};
        for (auto& [key, value] : point.params.items()) params[key] = value;
        std::ostringstream want;
        want << "p=" << odd << " divides=1";
        Certificate cert = point.cert;
        std::uint64_t p = odd;
        tasks.push_back({"divisibility.2np", params, want.str(), "",
                         [cert, p](Certificate*) {
                             std::ostringstream got;
                             got << "p=" << p
                                 << " divides=" << (verify_divisibility(cert, p) ? 1 : 0);
                             return got.str();
                         }});
    }
    return tasks;
}

} // namespace

std::vector<ClaimReport> verify_prop21(const VerifyOptions& opts,
                                       std::vector<CertifiedPoint>* sink) {
    return run_tasks(prop21_tasks(opts), opts.jobs, sink);
}

std::vector<ClaimReport> verify_prop23(const VerifyOptions& opts,
                                       std::vector<CertifiedPoint>* sink) {
    return run_tasks(prop23_tasks(opts), opts.jobs, sink);
}

std::vector<ClaimReport> verify_theorem4(const VerifyOptions& opts,
                                         std::vector<CertifiedPoint>* sink) {
    return run_tasks(theorem4_tasks(opts), opts.jobs, sink);
}

std::vector<ClaimReport> verify_theorem5(const VerifyOptions& opts,
                                         std::vector<CertifiedPoint>* sink) {
    return run_tasks(theorem5_tasks(opts), opts.jobs, sink);
}

bool verify_divisibility(const Certificate& c, std::uint64_t p) {
    if (!is_odd_prime(p)) throw NotApplicable("p must be an odd prime");
    std::uint64_t rest = c.order;
    if (rest == 0 || rest % p != 0) throw NotApplicable("order is not 2^a * p");
    rest /= p;
    while (rest % 2 == 0) rest /= 2;
    if (rest != 1) throw NotApplicable("order is not 2^a * p");
    for (std::uint64_t entry : c.schlafli)
        if (entry % p == 0) return true;
    return false;
}

std::vector<ClaimReport> verify_divisibility(const std::vector<CertifiedPoint>& corpus) {
    return run_tasks(divisibility_tasks(corpus), 1, nullptr);
}

std::vector<ClaimReport> verify_subgroup_structure(const VerifyOptions& opts) {
    return run_tasks(subgroup_tasks(opts), opts.jobs, nullptr);
}

std::vector<ClaimReport> verify_cor52(const VerifyOptions& opts) {
    return run_tasks(cor52_tasks(opts), opts.jobs, nullptr);
}

std::vector<ClaimReport> verify_all(const VerifyOptions& opts) {
    std::vector<ClaimReport> reports;
    std::vector<CertifiedPoint> corpus;
    auto append = [&](std::vector<ClaimReport> part) {
        for (ClaimReport& r : part) reports.push_back(std::move(r));
    };
    append(verify_prop21(opts, &corpus));
    append(verify_prop23(opts, &corpus));
    append(verify_theorem4(opts, &corpus));
    append(verify_theorem5(opts, &corpus));
    append(verify_divisibility(corpus));
    append(verify_subgroup_structure(opts));
    append(verify_cor52(opts));
    return reports;
}

} // namespace stringc
