// nullcharge: batch front end for the photon-like-charge toolkit.
//
// Subcommands: eigen, flux, propagate, map, conformal-check. Each reads a
// JSON config (--config), writes JSON or CSV (--out, stdout by default) and
// produces byte-identical output for identical inputs. Floats are printed
// with 17 significant digits.
//
// Exit codes: 0 success, 2 bad input, 3 quadrature failure, 4 inadmissible
// initial state, 5 divergence mid-run, 6 property failure.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nullcharge/conformal.hpp"
#include "nullcharge/eigen_motion.hpp"
#include "nullcharge/errors.hpp"
#include "nullcharge/field_catalog.hpp"
#include "nullcharge/radiation.hpp"
#include "nullcharge/retarded.hpp"
#include "nullcharge/worldline.hpp"

using nlohmann::json;
using namespace nullcharge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitQuadrature = 3;
constexpr int kExitInadmissible = 4;
constexpr int kExitDivergence = 5;
constexpr int kExitProperty = 6;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_vec3(const Vec3& v) {
    return "[" + fmt(v.x) + ", " + fmt(v.y) + ", " + fmt(v.z) + "]";
}

std::string fmt_vec4(const FourVector& v) {
    return "[" + fmt(v.t) + ", " + fmt(v.x) + ", " + fmt(v.y) + ", " + fmt(v.z) + "]";
}

std::string fmt_mat4(const Mat4& m) {
    std::string s = "[";
    for (int i = 0; i < 4; ++i) {
        s += i ? ", [" : "[";
        for (int j = 0; j < 4; ++j) s += (j ? ", " : "") + fmt(m.m[i][j]);
        s += "]";
    }
    return s + "]";
}

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(std::string("config is not valid JSON: ") + e.what());
    }
}

double require_number(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw InputError(std::string("config: missing numeric '") + key + "'");
    return j[key].get<double>();
}

double number_or(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw InputError(std::string("config: '") + key + "' must be a number");
    return j[key].get<double>();
}

Vec3 require_vec3(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != 3)
        throw InputError(std::string("config: '") + key + "' must be a 3-element array");
    const json& a = j[key];
    return {a[0].get<double>(), a[1].get<double>(), a[2].get<double>()};
}

void write_output(const std::string& out_path, const std::string& content, bool quiet) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot open output file: " + out_path);
    out << content;
    if (!quiet) std::cerr << "wrote " << out_path << "\n";
}

FieldFunction field_from_config(const json& cfg) {
    if (!cfg.contains("field")) throw InputError("config: missing 'field' spec");
    return make_field(parse_field_spec(cfg["field"].dump()));
}

NullWorldline worldline_from_config(const json& cfg, double t0, double t1) {
    if (!cfg.contains("worldline") || !cfg["worldline"].is_object())
        throw InputError("config: missing 'worldline' object");
    const json& w = cfg["worldline"];
    std::string kind = w.value("kind", "");
    if (kind == "circular") {
        double omega = require_number(w, "omega");
        if (!(omega > 0)) throw InputError("worldline: omega must be positive");
        return NullWorldline::circular(omega, t0, t1);
    }
    if (kind == "straight") {
        Vec3 origin = w.contains("origin") ? require_vec3(w, "origin") : Vec3{};
        Vec3 dir = require_vec3(w, "dir");
        if (std::abs(dir.norm() - 1.0) > 1e-9)
            throw InputError("worldline: dir must be a unit vector");
        return NullWorldline::straight(origin, dir, t0, t1);
    }
    if (kind == "csv") {
        if (!w.contains("path")) throw InputError("worldline: csv kind needs 'path'");
        return NullWorldline::from_csv(w["path"].get<std::string>());
    }
    throw InputError("worldline: kind must be circular, straight or csv");
}

int thread_budget(std::size_t work_items) {
    long n = 0;
    if (const char* env = std::getenv("NULLCHARGE_THREADS")) n = std::atol(env);
    if (n <= 0) n = static_cast<long>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    if (static_cast<std::size_t>(n) > work_items) n = static_cast<long>(work_items);
    return static_cast<int>(n);
}

// --- eigen ------------------------------------------------------------

int cmd_eigen(const json& cfg, const std::string& out_path, bool quiet) {
    double q = number_or(cfg, "q", 1.0);
    double deg_tol = number_or(cfg, "deg_tol", 1e-10);
    if (!(deg_tol > 0)) throw InputError("config: deg_tol must be positive");
    FieldEB f(require_vec3(cfg, "E"), require_vec3(cfg, "B"));

    EigenSolution sol = admissible_velocities(q, f, deg_tol);
    auto [i1, i2] = em_invariants(f);

    std::string s = "{\n";
    s += "  \"class\": \"" + std::string(to_string(sol.field_class)) + "\",\n";
    s += "  \"capture\": " + std::string(capture_surface_test(f, deg_tol) ? "true" : "false") + ",\n";
    s += "  \"invariants\": {\"B2_minus_E2\": " + fmt(i1) + ", \"E_dot_B\": " + fmt(i2) + "},\n";
    s += "  \"roots\": [";
    for (std::size_t i = 0; i < sol.roots.size(); ++i)
        s += (i ? ", [" : "[") + fmt(sol.roots[i].edot) + ", " +
             std::to_string(sol.roots[i].multiplicity) + "]";
    s += "],\n";
    if (sol.velocity_unconstrained) {
        s += "  \"velocities\": \"unconstrained\"\n";
    } else {
        s += "  \"velocities\": [";
        for (std::size_t i = 0; i < sol.velocities.size(); ++i)
            s += std::string(i ? ", " : "") + "{\"edot\": " + fmt(sol.velocities[i].edot) +
                 ", \"v\": " + fmt_vec3(sol.velocities[i].v) + "}";
        s += "]\n";
    }
    s += "}\n";
    write_output(out_path, s, quiet);
    return kExitOk;
}

// --- flux -------------------------------------------------------------

int cmd_flux(const json& cfg, const std::string& out_path, bool quiet,
             std::optional<double> eps_override) {
    double q = number_or(cfg, "q", 1.0);
    double t0 = require_number(cfg, "t0");
    double t1 = require_number(cfg, "t1");
    double epsilon = eps_override ? *eps_override : require_number(cfg, "epsilon");
    double quad_tol = number_or(cfg, "quad_tol", 1e-10);
    if (!(t1 > t0)) throw InputError("config: need t1 > t0");
    if (!(epsilon > 0) || !(epsilon <= M_PI)) throw InputError("config: epsilon must be in (0, pi]");
    if (!(quad_tol > 0)) throw InputError("config: quad_tol must be positive");

    NullWorldline w = worldline_from_config(cfg, t0, t1);
    CutoffFactors cf = cutoff_factors(epsilon);
    FourVector p = radiated_momentum(q, w, t1, epsilon, quad_tol);
    Mat4 m = radiated_angular_momentum(q, w, t1, epsilon, quad_tol);

    std::string s = "{\n";
    s += "  \"epsilon\": " + fmt(cf.epsilon) + ",\n";
    s += "  \"I0\": " + fmt(cf.I0) + ",\n";
    s += "  \"I1\": " + fmt(cf.I1) + ",\n";
    s += "  \"I0_eps4\": " + fmt(cf.I0 * std::pow(epsilon, 4)) + ",\n";
    s += "  \"p_em\": " + fmt_vec4(p) + ",\n";
    s += "  \"M_em\": " + fmt_mat4(m) + "\n";
    s += "}\n";
    write_output(out_path, s, quiet);
    return kExitOk;
}

// --- propagate ---------------------------------------------------------

int cmd_propagate(const json& cfg, const std::string& out_path, bool quiet) {
    double t0 = require_number(cfg, "t0");
    double t1 = require_number(cfg, "t1");
    double dt = require_number(cfg, "dt");
    double admis_tol = number_or(cfg, "admis_tol", 1e-9);
    if (!(t1 > t0) || !(dt > 0)) throw InputError("config: need t1 > t0 and dt > 0");
    if (!(admis_tol > 0)) throw InputError("config: admis_tol must be positive");
    if (!cfg.contains("initial") || !cfg["initial"].is_object())
        throw InputError("config: missing 'initial' state");
    const json& init = cfg["initial"];

    ParticleState state;
    state.z = FourVector(t0, require_vec3(init, "z"));
    state.v = require_vec3(init, "v");
    state.e = require_number(init, "e");
    state.q = number_or(init, "q", 1.0);
    if (std::abs(state.v.norm() - 1.0) > 1e-9) throw InputError("initial: |v| must be 1");
    if (state.e == 0.0) throw InputError("initial: e must be nonzero");

    FieldFunction field = field_from_config(cfg);

    // the initial state must already be an admissible eigen-solution
    {
        FieldEB f0 = field(state.z);
        double scale = 1.0 + std::abs(state.q) * std::sqrt(f0.E.norm2() + f0.B.norm2());
        if (admissibility_residual(state.q, f0, state.v) > admis_tol * scale) {
            std::cerr << "error: initial velocity is not admissible in the local field\n";
            return kExitInadmissible;
        }
    }

    auto row = [](const ParticleState& st) {
        FourVector p = st.p();
        return fmt(st.z.t) + "," + fmt(st.z.x) + "," + fmt(st.z.y) + "," + fmt(st.z.z) + "," +
               fmt(st.e) + "," + fmt(p.x) + "," + fmt(p.y) + "," + fmt(p.z) + "\n";
    };

    std::string s = "t,zx,zy,zz,e,px,py,pz\n";
    s += row(state);
    int exit_code = kExitOk;
    double t = t0;
    while (t < t1) {
        double step = std::min(dt, t1 - t);
        try {
            auto states = propagate(state, field, t, t + step, step, admis_tol);
            state = states.back();
        } catch (const RadiationDivergence& e) {
            s += std::string("# error: RadiationDivergence: ") + e.what() + "\n";
            exit_code = kExitDivergence;
            break;
        } catch (const MultiplierVanished& e) {
            s += std::string("# error: MultiplierVanished: ") + e.what() + "\n";
            exit_code = kExitDivergence;
            break;
        }
        t += step;
        s += row(state);
    }
    write_output(out_path, s, quiet);
    return exit_code;
}

// --- map ----------------------------------------------------------------

int cmd_map(const json& cfg, const std::string& out_path, bool quiet) {
    double q = number_or(cfg, "q", 1.0);
    double t = number_or(cfg, "t", 0.0);
    double deg_tol = number_or(cfg, "deg_tol", 1e-10);
    if (!(deg_tol > 0)) throw InputError("config: deg_tol must be positive");
    if (!cfg.contains("grid") || !cfg["grid"].is_object())
        throw InputError("config: missing 'grid' object");
    const json& g = cfg["grid"];
    Vec3 lo = require_vec3(g, "min"), hi = require_vec3(g, "max");
    if (!g.contains("n") || !g["n"].is_array() || g["n"].size() != 3)
        throw InputError("grid: 'n' must be a 3-element array");
    long n[3];
    for (int i = 0; i < 3; ++i) {
        n[i] = g["n"][i].get<long>();
        if (n[i] < 1 || n[i] > 2000) throw InputError("grid: counts must be in [1, 2000]");
        if (!std::isfinite(lo[i]) || !std::isfinite(hi[i]))
            throw InputError("grid: extents must be finite");
    }

    // lexicographic order in (x, y, z)
    std::vector<Vec3> grid;
    grid.reserve(static_cast<std::size_t>(n[0] * n[1] * n[2]));
    auto coord = [&](int axis, long i) {
        return n[axis] == 1 ? lo[axis] : lo[axis] + (hi[axis] - lo[axis]) * double(i) / double(n[axis] - 1);
    };
    for (long i = 0; i < n[0]; ++i)
        for (long j = 0; j < n[1]; ++j)
            for (long k = 0; k < n[2]; ++k) grid.push_back({coord(0, i), coord(1, j), coord(2, k)});

    FieldFunction field = field_from_config(cfg);

    // chunked parallel evaluation with deterministic ordering
    std::vector<MapRecord> records(grid.size());
    int nthreads = thread_budget(grid.size());
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    std::size_t chunk = (grid.size() + nthreads - 1) / nthreads;
    for (int w = 0; w < nthreads; ++w) {
        std::size_t begin = w * chunk, end = std::min(grid.size(), begin + chunk);
        if (begin >= end) break;
        workers.emplace_back([&, begin, end] {
            try {
                std::vector<Vec3> part(grid.begin() + begin, grid.begin() + end);
                auto out = velocity_map(field, part, t, q, deg_tol);
                std::copy(out.begin(), out.end(), records.begin() + begin);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : workers) th.join();
    if (first_error) std::rethrow_exception(first_error);

    std::string s = "x,y,z,Ex,Ey,Ez,Bx,By,Bz,class,capture,edot_plus,vpx,vpy,vpz,edot_minus,vmx,vmy,vmz\n";
    for (const MapRecord& r : records) {
        s += fmt(r.pos.x) + "," + fmt(r.pos.y) + "," + fmt(r.pos.z) + ",";
        s += fmt(r.field.E.x) + "," + fmt(r.field.E.y) + "," + fmt(r.field.E.z) + ",";
        s += fmt(r.field.B.x) + "," + fmt(r.field.B.y) + "," + fmt(r.field.B.z) + ",";
        s += std::string(to_string(r.field_class)) + ",";
        s += r.capture ? "true," : "false,";
        if (r.edot_plus) s += fmt(*r.edot_plus);
        s += ",";
        if (r.v_plus) s += fmt(r.v_plus->x) + "," + fmt(r.v_plus->y) + "," + fmt(r.v_plus->z);
        else s += ",,";
        s += ",";
        if (r.edot_minus) s += fmt(*r.edot_minus);
        s += ",";
        if (r.v_minus) s += fmt(r.v_minus->x) + "," + fmt(r.v_minus->y) + "," + fmt(r.v_minus->z);
        else s += ",,";
        s += "\n";
    }
    write_output(out_path, s, quiet);
    return kExitOk;
}

// --- conformal-check -----------------------------------------------------

// splitmix64; fixed across platforms so seeded runs are reproducible
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    Vec3 unit_vec3() {
        while (true) {
            Vec3 v{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
            double n = v.norm();
            if (n > 0.1 && n < 1.0) return v / n;
        }
    }
    Vec3 vec3(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)}; }
};

int cmd_conformal_check(const json& cfg, const std::string& out_path, bool quiet,
                        std::uint64_t seed) {
    long samples = static_cast<long>(number_or(cfg, "samples", 100));
    double tol_omega = number_or(cfg, "tol_omega", 1e-10);
    double tol_field = number_or(cfg, "tol_field", 1e-10);
    double tol_eom = number_or(cfg, "tol_eom", 1e-9);
    double tol_dil = number_or(cfg, "tol_dilatation", 1e-12);
    double b_scale = number_or(cfg, "b_scale", 0.05);
    double theta_range = number_or(cfg, "theta_range", 0.5);
    if (samples < 1) throw InputError("config: samples must be >= 1");
    for (double tol : {tol_omega, tol_field, tol_eom, tol_dil})
        if (!(tol > 0)) throw InputError("config: tolerances must be positive");

    Rng rng(seed);
    Mat4 eta = Mat4::metric();
    double max_omega = 0, max_field = 0, max_eom = 0, max_dil = 0;

    for (long i = 0; i < samples; ++i) {
        FourVector x(rng.uniform(1.5, 2.5), rng.unit_vec3() * rng.uniform(0.3, 1.0));
        FourVector b(rng.uniform(-b_scale, b_scale), rng.vec3(-b_scale, b_scale));
        double theta = rng.uniform(-theta_range, theta_range);

        ConformalJacobian j = conformal_jacobian(x, b);
        Mat4 identity_residual =
            j.Omega.transposed() * eta * j.Omega * (j.D * j.D) - eta;
        max_omega = std::max(max_omega, identity_residual.max_abs());

        FieldEB f(rng.vec3(-1, 1), rng.vec3(-1, 1));
        EmTensor F = em_tensor_from_eb(f);
        EmTensor Fp = transform_field(F, j);
        Mat4 back = j.Omega.transposed() * Fp.covariant() * j.Omega;
        double fscale = 1.0 + F.covariant().max_abs();
        max_field = std::max(max_field, (back - F.covariant()).max_abs() / fscale);

        if (classify_field(f) != FieldClass::Generic) continue;
        double escale = 1.0 + f.E.norm() + f.B.norm();
        max_eom = std::max(max_eom,
                           eom_invariance_residual(0.8, f, x, {theta, b}) / escale);
        max_dil = std::max(max_dil,
                           eom_invariance_residual(0.8, f, x, {theta, FourVector{}}) / escale);
    }

    bool pass = max_omega <= tol_omega && max_field <= tol_field && max_eom <= tol_eom &&
                max_dil <= tol_dil;

    std::string s = "{\n";
    s += "  \"seed\": " + std::to_string(seed) + ",\n";
    s += "  \"samples\": " + std::to_string(samples) + ",\n";
    s += "  \"max_omega_identity\": " + fmt(max_omega) + ",\n";
    s += "  \"max_field_roundtrip\": " + fmt(max_field) + ",\n";
    s += "  \"max_eom_residual\": " + fmt(max_eom) + ",\n";
    s += "  \"max_dilatation_residual\": " + fmt(max_dil) + ",\n";
    s += "  \"pass\": " + std::string(pass ? "true" : "false") + "\n";
    s += "}\n";
    write_output(out_path, s, quiet);
    return pass ? kExitOk : kExitProperty;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical toolkit for classical electrodynamics of massless point charges"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    std::uint64_t seed = 42;
    double eps = 0.0;
    bool quiet = false, eps_set = false;

    auto add_common = [&](CLI::App* sub, bool with_seed, bool with_eps) {
        sub->add_option("--config", config_path, "JSON config file")->required();
        sub->add_option("--out", out_path, "output path (default: stdout)");
        sub->add_flag("--quiet", quiet, "suppress informational messages");
        if (with_seed) sub->add_option("--seed", seed, "RNG seed");
        if (with_eps)
            sub->add_option("--eps", eps, "angular cutoff override")->each([&](const std::string&) {
                eps_set = true;
            });
    };

    CLI::App* c_eigen = app.add_subcommand("eigen", "field classification and admissible velocities");
    add_common(c_eigen, false, false);
    CLI::App* c_flux = app.add_subcommand("flux", "radiated energy-momentum and angular momentum");
    add_common(c_flux, false, true);
    CLI::App* c_prop = app.add_subcommand("propagate", "integrate an admissible trajectory");
    add_common(c_prop, false, false);
    CLI::App* c_map = app.add_subcommand("map", "velocity map of a field over a spatial grid");
    add_common(c_map, false, false);
    CLI::App* c_conf = app.add_subcommand("conformal-check", "randomized conformal-invariance checks");
    add_common(c_conf, true, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        json cfg = load_config(config_path);
        if (c_eigen->parsed()) return cmd_eigen(cfg, out_path, quiet);
        if (c_flux->parsed())
            return cmd_flux(cfg, out_path, quiet,
                            eps_set ? std::optional<double>(eps) : std::nullopt);
        if (c_prop->parsed()) return cmd_propagate(cfg, out_path, quiet);
        if (c_map->parsed()) return cmd_map(cfg, out_path, quiet);
        if (c_conf->parsed()) return cmd_conformal_check(cfg, out_path, quiet, seed);
    } catch (const QuadratureFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitQuadrature;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const PreconditionViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const DipoleCoreViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
