#include "wandering/basin.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "wandering/error.hpp"
#include "wandering/io.hpp"
#include "wandering/lemma_verifier.hpp"
#include "wandering/parallel.hpp"

namespace wandering {
namespace {

constexpr double kFigureImagEscape = 30.0;

bool in_base_disc(Complex zeta, int j) {
  const double c = 1.0 / (6.0 * j * kPi);
  return std::abs(zeta - Complex{c, 0.0}) < c;
}

std::string format_complex(Complex z) {
  return format_double(z.real()) + (z.imag() < 0 ? "" : "+") + format_double(z.imag()) + "i";
}

// Local offset of the centre for classifiers working relative to 2 n pi.
int local_index(const Classifier& c) {
  if (const auto* w = std::get_if<WanderingClassifier>(&c)) return w->n;
  if (const auto* l = std::get_if<LambdaHeuristicClassifier>(&c)) return l->n;
  return 0;
}

}  // namespace

void GridSpec::validate() const {
  require(nx >= 2 && ny >= 2, ErrorKind::PreconditionViolated, "grid needs nx, ny >= 2");
  require(std::isfinite(half_width) && half_width > 0.0 && std::isfinite(half_height) &&
              half_height > 0.0,
          ErrorKind::PreconditionViolated, "grid half-sizes must be positive");
  require(is_finite(center), ErrorKind::PreconditionViolated, "grid centre must be finite");
}

double GridSpec::pixel_diagonal() const { return std::hypot(pixel_width(), pixel_height()); }

std::string describe(const Classifier& c) {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, CauliflowerClassifier>) {
          return "q(z)=z-pi*z^2 trap=D(1/(6pi),1/(6pi)) escape=|z|>2/pi";
        } else if constexpr (std::is_same_v<K, WanderingClassifier>) {
          return "f at index " + std::to_string(k.n) + " trap=D_{n+k} escape=|zeta|>2/((n+k)pi)";
        } else if constexpr (std::is_same_v<K, LambdaHeuristicClassifier>) {
          return "f_lambda lambda=" + format_complex(k.p.lambda) + " at index " +
                 std::to_string(k.n) + " HEURISTIC r_explore=" + format_double(k.r_explore);
        } else if constexpr (std::is_same_v<K, QuadraticBoundedClassifier>) {
          return "q_lambda lambda=" + format_complex(k.p.lambda) + " HEURISTIC bounded-orbit";
        } else {
          return "f absolute frame, trap=any D_j (j>=5), best-effort";
        }
      },
      c);
}

PixelVerdict classify_cauliflower(Complex z, int max_iter) {
  require(max_iter >= 1, ErrorKind::PreconditionViolated, "max_iter must be >= 1");
  constexpr double c = 1.0 / (6.0 * kPi);
  constexpr double escape = 2.0 / kPi;
  for (int k = 0;; ++k) {
    if (std::abs(z - Complex{c, 0.0}) < c) return {Verdict::Inside, k};
    if (!(std::abs(z) <= escape)) return {Verdict::Outside, k};
    if (k == max_iter) return {Verdict::Undecided, k};
    z = eval_q(z);
  }
}

PixelVerdict classify_wandering_local(Complex zeta, int n, int max_steps) {
  require(n >= kN0, ErrorKind::PreconditionViolated, "wandering classifier needs n >= 5");
  require(max_steps >= 1, ErrorKind::PreconditionViolated, "max_steps must be >= 1");
  for (int k = 0;; ++k) {
    const int j = n + k;
    if (in_base_disc(zeta, j)) return {Verdict::Inside, k};
    if (!(std::abs(zeta) <= 2.0 / (j * kPi))) return {Verdict::Outside, k};
    if (k == max_steps) return {Verdict::Undecided, k};
    zeta = eval_h(j, zeta);
  }
}

PixelVerdict classify_wandering(Complex z, int n, int max_steps) {
  return classify_wandering_local(Complex{z.real() - n * kTwoPi, z.imag()}, n, max_steps);
}

PixelVerdict classify_lambda_heuristic(Complex zeta, const LambdaHeuristicClassifier& c,
                                       int max_iter) {
  require(max_iter >= 1, ErrorKind::PreconditionViolated, "max_iter must be >= 1");
  for (int k = 0;; ++k) {
    if (!(std::abs(zeta) <= c.r_explore)) return {Verdict::Outside, k};
    if (k == max_iter) return {Verdict::Inside, k};
    zeta = eval_h_lambda(c.n + k, zeta, c.p);
  }
}

PixelVerdict classify_quadratic_bounded(Complex z, const FamilyParam& p, int max_iter) {
  require(max_iter >= 1, ErrorKind::PreconditionViolated, "max_iter must be >= 1");
  const double escape = (2.0 + std::abs(1.0 + p.lambda)) / kPi;
  for (int k = 0;; ++k) {
    if (!(std::abs(z) <= escape)) return {Verdict::Outside, k};
    if (k == max_iter) return {Verdict::Inside, k};
    z = eval_q_lambda(z, p);
  }
}

PixelVerdict classify_figure(Complex z, int max_iter) {
  require(max_iter >= 1, ErrorKind::PreconditionViolated, "max_iter must be >= 1");
  for (int k = 0;; ++k) {
    if (!is_finite(z) || std::abs(z.imag()) > kFigureImagEscape) return {Verdict::Outside, k};
    const long j = std::lround(z.real() / kTwoPi);
    if (j >= kN0 && in_base_disc(Complex{z.real() - j * kTwoPi, z.imag()}, static_cast<int>(j)))
      return {Verdict::Inside, k};
    if (k == max_iter) return {Verdict::Outside, k};
    z = eval_f(z);
  }
}

// ---------------------------------------------------------------------------

std::size_t ClassifiedGrid::count(Verdict v) const {
  std::size_t c = 0;
  for (const auto& p : verdicts) c += p.verdict == v;
  return c;
}

double ClassifiedGrid::undecided_fraction() const {
  if (verdicts.empty()) return 0.0;
  return static_cast<double>(count(Verdict::Undecided)) / static_cast<double>(verdicts.size());
}

ClassifiedGrid classify_grid(const GridSpec& spec, const Classifier& classifier, int max_iter) {
  spec.validate();
  require(max_iter >= 1, ErrorKind::PreconditionViolated, "max_iter must be >= 1");
  if (const auto* w = std::get_if<WanderingClassifier>(&classifier))
    require(w->n >= kN0, ErrorKind::PreconditionViolated, "wandering classifier needs n >= 5");

  ClassifiedGrid out;
  out.spec = spec;
  out.classifier = classifier;
  out.max_iter = max_iter;
  out.map_id = describe(classifier);
  out.verdicts.resize(spec.size());

  const int n = local_index(classifier);
  const Complex local_center{spec.center.real() - n * kTwoPi, spec.center.imag()};

  parallel_for(spec.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const int i = static_cast<int>(idx % spec.nx);
      const int j = static_cast<int>(idx / spec.nx);
      const Complex offset = spec.pixel_offset(i, j);
      out.verdicts[idx] = std::visit(
          [&](const auto& k) -> PixelVerdict {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, CauliflowerClassifier>) {
              return classify_cauliflower(spec.center + offset, max_iter);
            } else if constexpr (std::is_same_v<K, WanderingClassifier>) {
              return classify_wandering_local(local_center + offset, k.n, max_iter);
            } else if constexpr (std::is_same_v<K, LambdaHeuristicClassifier>) {
              return classify_lambda_heuristic(local_center + offset, k, max_iter);
            } else if constexpr (std::is_same_v<K, QuadraticBoundedClassifier>) {
              return classify_quadratic_bounded(spec.center + offset, k.p, max_iter);
            } else {
              return classify_figure(spec.center + offset, max_iter);
            }
          },
          classifier);
    }
  });
  return out;
}

PointSet extract_inside_points(const ClassifiedGrid& grid) {
  PointSet out;
  for (int j = 0; j < grid.spec.ny; ++j)
    for (int i = 0; i < grid.spec.nx; ++i)
      if (grid.at(i, j).verdict == Verdict::Inside) out.points.push_back(grid.spec.pixel_center(i, j));
  require(!out.points.empty(), ErrorKind::EmptySet, "no Inside pixel in grid (" + grid.map_id + ")");
  const GridSpec& s = grid.spec;
  out.provenance = "grid center=" + format_complex(s.center) + " half=" +
                   format_double(s.half_width) + "x" + format_double(s.half_height) + " res=" +
                   std::to_string(s.nx) + "x" + std::to_string(s.ny) +
                   " max_iter=" + std::to_string(grid.max_iter) + " map=" + grid.map_id;
  return out;
}

PointSet rescale_component(const PointSet& points, int n) {
  PointSet out;
  out.points.reserve(points.points.size());
  const double shift = n * kTwoPi;
  for (Complex p : points.points)
    out.points.push_back(static_cast<double>(n) * Complex{p.real() - shift, p.imag()});
  out.provenance = points.provenance + " rescaled n=" + std::to_string(n);
  return out;
}

bool reverify_wandering_inside(Complex z, int n, int decided_at) {
  Complex zeta{z.real() - n * kTwoPi, z.imag()};
  for (int k = 0; k <= decided_at + 10; ++k) {
    const int j = n + k;
    if (k >= decided_at && in_base_disc(zeta, j)) return true;
    const double shift = j * kTwoPi;
    zeta = (zeta + shift) * std::cos(zeta) - shift;
  }
  return false;
}

// ---------------------------------------------------------------------------

std::string to_ppm(const ClassifiedGrid& grid) {
  static constexpr std::array<const char*, 3> kColor = {"255 220 0", "20 20 40", "128 128 128"};
  std::string out = "P3\n" + std::to_string(grid.spec.nx) + " " + std::to_string(grid.spec.ny) +
                    "\n255\n";
  out.reserve(out.size() + grid.verdicts.size() * 12);
  for (int j = 0; j < grid.spec.ny; ++j) {
    for (int i = 0; i < grid.spec.nx; ++i) {
      out += kColor[static_cast<std::size_t>(grid.at(i, j).verdict)];
      out += (i % 5 == 4 || i == grid.spec.nx - 1) ? '\n' : ' ';
    }
  }
  return out;
}

void write_ppm(const ClassifiedGrid& grid, const std::string& path) {
  write_file_atomic(path, to_ppm(grid));
}

std::string run_length_dump(const ClassifiedGrid& grid) {
  static constexpr std::array<char, 3> kCode = {'I', 'O', 'U'};
  std::ostringstream os;
  os << grid.spec.nx << ' ' << grid.spec.ny << '\n';
  for (int j = 0; j < grid.spec.ny; ++j) {
    int i = 0;
    while (i < grid.spec.nx) {
      const Verdict v = grid.at(i, j).verdict;
      int run = 0;
      while (i < grid.spec.nx && grid.at(i, j).verdict == v) {
        ++i;
        ++run;
      }
      os << kCode[static_cast<std::size_t>(v)] << run << (i == grid.spec.nx ? '\n' : ' ');
    }
  }
  return os.str();
}

}  // namespace wandering
