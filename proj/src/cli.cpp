#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "adm/adomian.hpp"
#include "adm/diophantine.hpp"
#include "adm/json_io.hpp"
#include "adm/pendulum.hpp"
#include "adm/reduced.hpp"
#include "adm/series.hpp"

namespace adm {

namespace {

std::string format_double(double value) {
  if (value == 0.0) return "0";  // canonicalize -0
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

struct PendulumOptions {
  std::string angle_text;  // "pi/2" selects the exact-rational domain
  double geometric_constant = 1.0;
  int components = 10;
  int order = 0;  // 0 means 2 * components
  std::vector<double> eval_grid;
};

void emit_pendulum(const PendulumOptions& opt, const std::string& format, std::ostream& out) {
  const bool exact = opt.angle_text == "pi/2";
  const int order = opt.order > 0 ? opt.order : 2 * opt.components;
  const double angle = exact ? std::acos(0.0) : std::stod(opt.angle_text);

  PendulumProblem problem{angle, opt.geometric_constant, opt.components, order};
  validate(problem);

  // Always report the deviation u - a; the constant a itself need not live
  // in the coefficient domain (a right angle is not rational).
  std::vector<std::string> rational_coefficients;
  std::vector<double> float_coefficients;
  if (exact) {
    double integral_part = 0.0;
    if (std::modf(opt.geometric_constant, &integral_part) != 0.0) {
      throw std::invalid_argument("the exact domain (a = pi/2) needs an integer b");
    }
    const Rational b(static_cast<long long>(integral_part));
    const TruncatedSeries<Rational> deviation =
        pendulum_deviation<Rational>(sin_derivative_at_right_angle, b, opt.components, order);
    for (int n = 0; n <= order; ++n) {
      rational_coefficients.push_back(format_rational(deviation[n]));
      float_coefficients.push_back(to_double(deviation[n]));
    }
  } else {
    const TruncatedSeries<double> deviation = pendulum_deviation<double>(
        sin_derivatives_at(angle), opt.geometric_constant, opt.components, order);
    for (int n = 0; n <= order; ++n) {
      const double c = deviation[n];
      float_coefficients.push_back(c == 0.0 ? 0.0 : c);
    }
  }

  const auto solution_at = [&](double t) {
    double deviation_value = 0.0;
    for (int n = order; n >= 0; --n) deviation_value = deviation_value * t + float_coefficients[static_cast<std::size_t>(n)];
    return angle + deviation_value;
  };

  if (format == "json") {
    Json record;
    record["a"] = angle;
    record["b"] = opt.geometric_constant;
    record["M"] = opt.components;
    record["N"] = order;
    record["domain"] = exact ? "rational" : "float";
    Json coefficients = Json::array();
    if (exact) {
      for (const std::string& c : rational_coefficients) coefficients.push_back(c);
    } else {
      for (double c : float_coefficients) coefficients.push_back(c);
    }
    record["coefficients"] = std::move(coefficients);
    if (!opt.eval_grid.empty()) {
      Json samples = Json::array();
      for (double t : opt.eval_grid) samples.push_back(Json::array({t, solution_at(t)}));
      record["samples"] = std::move(samples);
    }
    out << record.dump(2) << "\n";
    return;
  }

  out << "a = " << (exact ? std::string("pi/2") : format_double(angle)) << "\n";
  out << "b = " << format_double(opt.geometric_constant) << "\n";
  out << "components = " << opt.components << "\n";
  out << "order = " << order << "\n";
  out << "domain = " << (exact ? "rational" : "float") << "\n";
  out << "u(t) = a + sum c[n] t^n\n";
  for (int n = 0; n <= order; ++n) {
    out << "c[" << n << "] = "
        << (exact ? rational_coefficients[static_cast<std::size_t>(n)]
                  : format_double(float_coefficients[static_cast<std::size_t>(n)]))
        << "\n";
  }
  if (!opt.eval_grid.empty()) {
    out << "# t u(t)\n";
    for (double t : opt.eval_grid) {
      out << format_double(t) << " " << format_double(solution_at(t)) << "\n";
    }
  }
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adomian polynomial generator and pendulum series solver"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string output_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output,-o", output_path, "Write output to a file instead of stdout");

  int m = 0;
  int k = -1;

  CLI::App* zpoly = app.add_subcommand("zpoly", "Print the reduced polynomial Z_{m,k}");
  zpoly->fallthrough();  // lets --format / --output appear after the subcommand
  zpoly->add_option("m", m, "Subscript sum")->required();
  zpoly->add_option("k", k, "Power sum (derivative order)")->required();

  CLI::App* apoly = app.add_subcommand("apoly", "Print the Adomian polynomial A_m");
  apoly->fallthrough();
  apoly->add_option("m", m, "Polynomial order")->required();

  CLI::App* count_cmd = app.add_subcommand("count", "Count the monomials of Z_{m,k} (or all k)");
  count_cmd->fallthrough();
  count_cmd->add_option("m", m, "Subscript sum")->required();
  count_cmd->add_option("k", k, "Power sum; omit for a per-k table");

  CLI::App* pendulum = app.add_subcommand("pendulum", "Series solution of u'' + b sin(u) = 0");
  pendulum->fallthrough();
  PendulumOptions pendulum_options;
  pendulum->add_option("--a", pendulum_options.angle_text,
                       "Initial angle in radians; the literal pi/2 selects exact arithmetic")
      ->required();
  pendulum->add_option("--b", pendulum_options.geometric_constant, "Geometric constant, > 0");
  pendulum->add_option("--components", pendulum_options.components, "Number of Adomian polynomials M");
  pendulum->add_option("--order", pendulum_options.order, "Series truncation N (default 2M)");
  pendulum->add_option("--eval", pendulum_options.eval_grid, "Comma-separated t grid to sample u(t) on")
      ->delimiter(',');

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  std::ofstream file;
  if (!output_path.empty()) {
    file.open(output_path);
    if (!file) {
      err << "error: cannot open '" << output_path << "' for writing\n";
      return 2;
    }
  }
  std::ostream& sink = output_path.empty() ? out : file;

  try {
    if (*zpoly) {
      const ReducedPolynomial z = reduced_polynomial(m, k);
      if (format == "json") {
        sink << to_json(z).dump(2) << "\n";
      } else {
        sink << to_text(z) << "\n";
      }
    } else if (*apoly) {
      const AdomianPolynomial a = adomian_polynomial(m);
      sink << render(a, format == "json" ? RenderFormat::json : RenderFormat::text) << "\n";
    } else if (*count_cmd) {
      if (k >= 0) {
        const std::uint64_t n = count(m, k);
        if (format == "json") {
          Json j;
          j["m"] = m;
          j["k"] = k;
          j["count"] = n;
          sink << j.dump(2) << "\n";
        } else {
          sink << n << "\n";
        }
      } else {
        if (m < 1) throw std::invalid_argument("require m >= 1, got m=" + std::to_string(m));
        std::uint64_t total = 0;
        Json counts = Json::array();
        for (int kk = 1; kk <= m; ++kk) {
          const std::uint64_t n = count(m, kk);
          total += n;
          if (format == "json") {
            Json row;
            row["k"] = kk;
            row["count"] = n;
            counts.push_back(std::move(row));
          } else {
            sink << "k=" << kk << ": " << n << "\n";
          }
        }
        if (format == "json") {
          Json j;
          j["m"] = m;
          j["counts"] = std::move(counts);
          j["total"] = total;
          sink << j.dump(2) << "\n";
        } else {
          sink << "total: " << total << "\n";
        }
      }
    } else if (*pendulum) {
      emit_pendulum(pendulum_options, format, sink);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace adm
