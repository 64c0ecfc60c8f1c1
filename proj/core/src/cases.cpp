// SPDX-License-Identifier: MIT
#include "hybridfp/cases.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "hybridfp/errors.hpp"
#include "hybridfp/norms.hpp"

namespace hybridfp {

namespace {

// ---------------------------------------------------------------------------
// Reference tables: iterate values at t = 0.1, ..., 1.0 for the four standard
// columns, in column order (m=2,n=9), (m=4,n=9), (m=2,n=33), (m=4,n=33),
// plus the stored sup-norm errors. Mirrored verbatim by the CSV fixtures
// under data/ (a test cross-checks the two copies).
// ---------------------------------------------------------------------------

struct ReferenceTable {
    double values[4][10];
    double norms[4];
};

constexpr ReferenceTable kTableEx1 = {
    {{0.25964068562641207, 0.2581608132685836, 0.25785705013803817, 0.25774159101031774,
      0.2576285346430475, 0.25751784650251447, 0.2574094899054699, 0.25730342712624404,
      0.25719961932300417, 0.2570980270442474},
     {0.2526360625738145, 0.2512245431325148, 0.25102089532293176, 0.25100874582984495,
      0.2509968386936278, 0.2509851672563384, 0.25097372508850474, 0.2509625059364119,
      0.25095150376429876, 0.2509407127451644},
     {0.25779577744548676, 0.2576778369861067, 0.2575623161293616, 0.25744919245075903,
      0.25733843642963494, 0.2572300145734221, 0.2571238909612659, 0.25702002815700664,
      0.2569183878122034, 0.25681893107062653},
     {0.25062384017038686, 0.2506151528771704, 0.25060665510642743, 0.2505983412941664,
      0.2505902060799007, 0.2505822442972077, 0.2505744509661791, 0.25056682128612107,
      0.25055935062726176, 0.2505520345235613}},
    {9.90603e-3, 2.86369e-3, 8.33966e-3, 1.0862e-3}};

constexpr ReferenceTable kTableEx2 = {
    {{0.27417118067351837, 0.2990105059004299, 0.32391591487977106, 0.3488342313971621,
      0.3737541821287371, 0.39867580493805804, 0.42359867388137695, 0.4485219829977168,
      0.47344474190449987, 0.498366567564148},
     {0.27151545133640886, 0.29611673530305527, 0.3207837845940706, 0.34546352791535867,
      0.3701445199310059, 0.3948268789541488, 0.4195107187398104, 0.4441962543294659,
      0.4688837174935067, 0.49357335586512446},
     {0.2740819659311709, 0.2989981055587191, 0.3239149335622202, 0.3488329357145739,
      0.3737524860894689, 0.39867366683899425, 0.4235961144223516, 0.448518998226605,
      0.47344130014978747, 0.49836264112050677},
     {0.27145329704728827, 0.29613324654650613, 0.3208140511167786, 0.34549585475483185,
      0.3701788114857308, 0.39486308640853285, 0.41954885401447617, 0.44423629583080837,
      0.468925600958778, 0.4936169655580174}},
    {1.63343e-3, 6.42664e-3, 1.63736e-3, 6.38303e-3}};

constexpr ReferenceTable kTableEx3 = {
    {{0.10994463333333335, 0.11981787538985864, 0.12975090261315447, 0.1396858063225927,
      0.14960946152701812, 0.15952079194994145, 0.16941936215524034, 0.17930673541360537,
      0.18918899833227526, 0.19908194969111695},
     {0.10994463333333335, 0.11981791805770493, 0.12975116990203317, 0.13968664031615474,
      0.1496116012197044, 0.1595251486759711, 0.1694262809122463, 0.1793140741901599,
      0.18918756887790722, 0.1990457618518603},
     {0.10995952813954675, 0.11994695097301926, 0.12993149120265635, 0.13991267664284926,
      0.14989041600508018, 0.15986592032169128, 0.1698435692932222, 0.17983433359550066,
      0.18986179093331174, 0.1999725602822185},
     {0.10995955765685321, 0.11994727822516114, 0.1299327014013851, 0.13991561146443787,
      0.14989578496520412, 0.15987299132148372, 0.1698469898893412, 0.17981752625254807,
      0.1897843325246908, 0.1997471266515799}},
    {9.1805e-4, 9.544238e-4, 1.65588e-4, 2.52873e-4}};

constexpr ReferenceTable kTableEx4 = {
    {{0.09994959265924196, 0.19982697772113361, 0.29970145954436234, 0.39957605185527684,
      0.49945067663057896, 0.5993252823989378, 0.699199836738067, 0.799074326433192,
      0.8989487530236073, 0.9988231278772514},
     {0.09994959275258121, 0.19982698062053245, 0.2997014781005956, 0.3995761128223367,
      0.49945081633085925, 0.5993255387084228, 0.6992002390137386, 0.7990748839377436,
      0.8989494465775325, 0.9988239054111422},
     {0.09997341307990056, 0.19994196511596454, 0.2999105557764353, 0.39987915932823637,
      0.4998477565970089, 0.5998163380147611, 0.699784904433895, 0.7997534658105931,
      0.8997220384049086, 0.9996906411587515},
     {0.09997341318295203, 0.19994196762406424, 0.29991056948622924, 0.3998792008487213,
      0.49984784689621164, 0.5998164954408373, 0.6997851365136741, 0.7997537620153589,
      0.8997223654190059, 0.9996909415162489}},
    {1.17687e-3, 1.17609e-3, 3.09359e-4, 3.09058e-4}};

constexpr ReferenceTable kTableEx5 = {
    {{0.009807889768197995, 0.01913347555848587, 0.028858901595188682, 0.038745648738524936,
      0.04868660113266646, 0.05866572236367756, 0.06866841551194598, 0.07868630321311545,
      0.08871376330117915, 0.0987469779423797},
     {0.009807889768197995, 0.01913346934141619, 0.028858870390823594, 0.038745618536895766,
      0.0486866179763731, 0.05866579674631664, 0.06866853944486338, 0.07868650513410157,
      0.08871405879246874, 0.0987473453913395},
     {0.009850176149181912, 0.019763982715543943, 0.029713698642337805, 0.039685125981635705,
      0.04967020617859288, 0.05966446431697861, 0.06966463823770887, 0.07966879607286238,
      0.08967554656783944, 0.09968401150389958},
     {0.009850173620253975, 0.01976400675926519, 0.029713848529122386, 0.039685476825051164,
      0.04967087311797989, 0.05966546941999516, 0.06966603029961263, 0.07967053753105567,
      0.08967762811140002, 0.09968636366339986}},
    {1.33714e-3, 1.33705e-3, 3.35272e-4, 3.34982e-4}};

std::map<std::pair<int, int>, ExpectedColumn> expected_from(const ReferenceTable& table) {
    static const std::pair<int, int> kColumns[4] = {{2, 9}, {4, 9}, {2, 33}, {4, 33}};
    std::map<std::pair<int, int>, ExpectedColumn> out;
    for (int c = 0; c < 4; ++c) {
        ExpectedColumn col;
        col.values.assign(table.values[c], table.values[c] + 10);
        col.error_norm = table.norms[c];
        out.emplace(kColumns[c], std::move(col));
    }
    return out;
}

std::vector<double> standard_table_points() {
    std::vector<double> pts;
    pts.reserve(10);
    for (int k = 1; k <= 10; ++k) pts.push_back(static_cast<double>(k) / 10.0);
    return pts;
}

// ---------------------------------------------------------------------------
// Case definitions. Radii are certificate data: each ball contains the initial
// guess and the solution, and (where mathematically possible) satisfies the
// mapping/contraction bounds checked by certificate_for.
// ---------------------------------------------------------------------------

BenchCase make_ex1() {
    const double a = 0.1;
    const double b = 0.25;
    const double R = 0.75;  // ball radius; a * (log 2 + R) < 1 holds

    NonlocalIVP p;
    p.rho = 1.0;
    p.f = [a, b](double t, double) { return b / (1.0 + a * std::exp(-b) * t); };
    p.g = [a](double, double x) { return a * std::exp(-x); };
    p.Gamma = [b](const FunctionExpr& u, int level) {
        return b * (sup_norm(u, level) + 0.75);
    };
    p.r = R;
    p.delta = 1.0 / b;
    p.L_Gamma = b;
    p.alpha = [](double) { return 0.0; };
    p.phi = zero_dfunction();
    p.gamma = [a, R](double t) { return a * std::exp(R) * (1.0 - std::exp(-t)); };
    p.psi = identity_dfunction();

    BenchCase c;
    c.id = "Ex1";
    c.problem = std::move(p);
    c.x0 = FunctionExpr::from_callable(
        [b](double t) { return 0.25 * (std::sqrt(b * t) + 1.0); });
    c.exact = FunctionExpr::constant(b);
    c.table_points = standard_table_points();
    c.expected = expected_from(kTableEx1);
    return c;
}

BenchCase make_ex2() {
    const double a = 0.05;
    const double b = 0.25;
    const double R = 0.5;  // 2b <= R and (a/3b)(b^3 + R^3) < 1 hold

    NonlocalIVP p;
    p.rho = 1.0;
    p.f = [a, b](double t, double x) {
        const double u = x / b;
        return b * (t + 1.0) / (1.0 + (a * b * b / 3.0) * (u * u * u - 1.0));
    };
    p.g = [a](double, double x) { return a * x * x; };
    p.Gamma = [b](const FunctionExpr& u, int level) {
        const double s = sup_norm(u, level);
        return s * s / (4.0 * b);
    };
    p.r = R;
    p.delta = a * R * R * R / (3.0 * b * b) + 1.0 / b;
    p.L_Gamma = R / (2.0 * b);
    p.alpha = [a, b, R](double t) {
        const double d = 1.0 - (a / (3.0 * b)) * (R * R * R + b * b * b);
        return a * (t + 1.0) * R * R / (d * d);
    };
    p.phi = identity_dfunction();
    p.gamma = [a, R](double) { return 2.0 * a * R; };
    p.psi = identity_dfunction();

    BenchCase c;
    c.id = "Ex2";
    c.problem = std::move(p);
    c.x0 = FunctionExpr::from_callable([](double t) { return 0.5 * t; });
    c.exact = FunctionExpr::from_callable([b](double t) { return b * (t + 1.0); });
    c.table_points = standard_table_points();
    c.expected = expected_from(kTableEx2);
    return c;
}

BenchCase make_ex3() {
    const double a = 0.1;
    const double b = 0.1;
    // Ball radius 1: contains the initial guess (sup = 1) and the solution
    // (sup = 0.2), and both certificate conditions hold (M_F*M_G = 0.6 <= 1,
    // Theta(t) = 0.4 t < t). Larger balls break the contraction bound.
    const double R = 1.0;

    HybridIntegralEq p;
    p.rho = 1.0;
    p.f = [a](double t, double) { return a * (t + 1.0); };
    p.q = [a, b](double t) {
        const double u = t + 1.0;
        return b / a - (b * b / 3.0) * (u * u * u - 1.0);
    };
    p.K = [](double, double, double x) { return x * x; };
    p.apply_defaults();
    p.r = R;
    p.alpha = [](double) { return 0.0; };
    p.phi = zero_dfunction();
    p.gamma = [R](double, double) { return 2.0 * R; };
    p.psi = identity_dfunction();

    BenchCase c;
    c.id = "Ex3";
    c.problem = std::move(p);
    c.x0 = FunctionExpr::from_callable([](double t) { return t * t; });
    c.exact = FunctionExpr::from_callable([b](double t) { return b * (t + 1.0); });
    c.table_points = standard_table_points();
    c.expected = expected_from(kTableEx3);
    return c;
}

BenchCase make_ex4() {
    const double a = 0.01;
    const double b = 1.0;
    const double c_dev = 1.0 - a;  // deviation parameter; 1 - c_dev = a
    const double R = 3.0;

    HybridIntegralEq p;
    p.rho = 1.0;
    p.f = [a, b](double, double x) { return a * std::exp(-x) + b; };
    p.q = [a, b, c_dev](double t) {
        return t / (a * std::exp(-t) + b) +
               std::log(std::cos((1.0 - c_dev) * t)) / (1.0 - c_dev);
    };
    p.K = [c_dev](double, double, double x) { return std::tan((1.0 - c_dev) * x); };
    p.apply_defaults();
    p.r = R;
    p.alpha = [a, R](double) { return a * std::exp(R); };
    p.phi = DFunction([](double t) { return 1.0 - std::exp(-t); }, "1 - exp(-t)");
    p.gamma = [c_dev, R](double, double) {
        const double u = std::tan((1.0 - c_dev) * R);
        return 1.0 + u * u;
    };
    p.psi = DFunction([c_dev](double t) { return std::tan((1.0 - c_dev) * t); },
                      "tan((1-c) t)");

    BenchCase c;
    c.id = "Ex4";
    c.problem = std::move(p);
    c.x0 = FunctionExpr::from_callable([](double t) { return std::sin(t); });
    c.exact = FunctionExpr::identity();
    c.table_points = standard_table_points();
    c.expected = expected_from(kTableEx4);
    return c;
}

BenchCase make_ex5() {
    const double a = 0.1;
    const double b = 1.0;
    const double R = 0.75;  // any radius in (0, 1) containing the initial guess works

    // Closed form of integral_0^t (1 - e^{-(t+1)(a s + 1)}) ds.
    auto inner = [a](double t) {
        const double tp = t + 1.0;
        return t - std::exp(-tp) * (1.0 - std::exp(-a * t * tp)) / (a * tp);
    };

    HybridIntegralEq p;
    p.rho = 1.0;
    p.f = [a, b, inner](double t, double) {
        const double tp = t + 1.0;
        return a * t / ((b + t) * (b + t) + inner(t) / tp);
    };
    p.q = [b](double t) { return (b + t) * (b + t); };
    // Closed form of integral_0^{x+1} e^{-(t+1)u} du.
    p.K = [](double t, double, double x) {
        const double tp = t + 1.0;
        return (1.0 - std::exp(-tp * (x + 1.0))) / tp;
    };
    p.apply_defaults();
    p.r = R;
    p.alpha = [](double) { return 0.0; };
    p.phi = zero_dfunction();
    p.gamma = [R](double t, double) {
        const double tp = t + 1.0;
        return std::exp(tp * (R - 1.0)) / tp;
    };
    p.psi = DFunction([](double t) { return 1.0 - std::exp(-2.0 * t); }, "1 - exp(-2t)");

    BenchCase c;
    c.id = "Ex5";
    c.problem = std::move(p);
    c.x0 = FunctionExpr::from_callable(
        [](double t) { return 0.5 * std::cos(10.0 * std::numbers::pi * t); });
    c.exact = FunctionExpr::from_callable([a](double t) { return a * t; });
    c.table_points = standard_table_points();
    c.expected = expected_from(kTableEx5);
    return c;
}

}  // namespace

const std::vector<std::string>& case_ids() {
    static const std::vector<std::string> ids = {"Ex1", "Ex2", "Ex3", "Ex4", "Ex5"};
    return ids;
}

BenchCase load_case(const std::string& id) {
    if (id == "Ex1") return make_ex1();
    if (id == "Ex2") return make_ex2();
    if (id == "Ex3") return make_ex3();
    if (id == "Ex4") return make_ex4();
    if (id == "Ex5") return make_ex5();
    throw UnknownCaseError("unknown case: " + id);
}

CaseReport run_case(const BenchCase& bench, int m, int n, const SolveOptions& opts) {
    if (m < 1 || n < 2) {
        throw InvalidArgumentError("run_case: require m >= 1 and n >= 2");
    }
    const auto start = std::chrono::steady_clock::now();

    SolveOptions solve_opts = opts;
    solve_opts.exact = bench.exact;
    const std::vector<std::size_t> n_list(static_cast<std::size_t>(m),
                                          static_cast<std::size_t>(n));
    SolveReport solved = bench.is_ivp()
                             ? solve_ivp(std::get<NonlocalIVP>(bench.problem), bench.x0, m,
                                         n_list, solve_opts)
                             : solve_integral(std::get<HybridIntegralEq>(bench.problem),
                                              bench.x0, m, n_list, solve_opts);

    CaseReport report;
    report.case_id = bench.id;
    report.m = m;
    report.n = n;
    report.residual = solved.residual;
    report.error_norm = solved.error_norm.value_or(0.0);
    report.certificate = solved.certificate;

    const auto expected_it = bench.expected.find({m, n});
    report.rows.reserve(bench.table_points.size());
    for (std::size_t i = 0; i < bench.table_points.size(); ++i) {
        CaseRow row;
        row.t = bench.table_points[i];
        row.value = solved.solution()(row.t);
        row.exact = bench.exact(row.t);
        if (expected_it != bench.expected.end()) {
            row.expected = expected_it->second.values[i];
            row.deviation = std::abs(row.value - *row.expected);
        }
        report.rows.push_back(row);
    }
    if (expected_it != bench.expected.end()) {
        report.expected_error_norm = expected_it->second.error_norm;
    }

    const auto stop = std::chrono::steady_clock::now();
    report.runtime_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

}  // namespace hybridfp
