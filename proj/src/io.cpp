#include "oqs/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>

namespace oqs::io {

namespace {

void require(bool cond, const char* invariant, double magnitude = 0.0) {
  if (!cond) throw ValidationError(invariant, magnitude);
}

}  // namespace

nlohmann::json matrix_to_json(const Mat& m) {
  nlohmann::json j;
  j["dim"] = m.rows();
  std::vector<double> re, im;
  re.reserve(m.size());
  im.reserve(m.size());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  j["re"] = re;
  j["im"] = im;
  return j;
}

Mat matrix_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("dim") && j.contains("re"),
          "MalformedMatrixJson");
  const int n = j.at("dim").get<int>();
  require(n > 0, "MalformedMatrixJson", n);
  const auto re = j.at("re").get<std::vector<double>>();
  std::vector<double> im(static_cast<std::size_t>(n) * n, 0.0);
  if (j.contains("im")) im = j.at("im").get<std::vector<double>>();
  require(re.size() == static_cast<std::size_t>(n) * n,
          "MalformedMatrixJson", static_cast<double>(re.size()));
  require(im.size() == re.size(), "MalformedMatrixJson",
          static_cast<double>(im.size()));
  Mat m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const std::size_t k = static_cast<std::size_t>(r) * n + c;
      m(r, c) = cplx(re[k], im[k]);
    }
  return m;
}

nlohmann::json channel_to_json(const QuantumChannel& ch) {
  nlohmann::json j;
  j["dim"] = ch.dim;
  j["trace_preserving"] = ch.trace_preserving;
  if (ch.has_kraus()) {
    nlohmann::json ks = nlohmann::json::array();
    for (const Mat& k : ch.kraus) ks.push_back(matrix_to_json(k));
    j["kraus"] = ks;
  } else {
    j["choi"] = matrix_to_json(ch.choi);
  }
  return j;
}

QuantumChannel channel_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("dim"), "MalformedChannelJson");
  const int n = j.at("dim").get<int>();
  if (j.contains("kraus")) {
    std::vector<Mat> ops;
    for (const auto& k : j.at("kraus")) ops.push_back(matrix_from_json(k));
    const bool tp = j.value("trace_preserving", true);
    QuantumChannel ch = QuantumChannel::from_kraus(std::move(ops), tp);
    require(ch.dim == n, "DimensionMismatch", ch.dim - n);
    return ch;
  }
  require(j.contains("choi"), "MalformedChannelJson");
  return QuantumChannel::from_choi(matrix_from_json(j.at("choi")), n,
                                   j.value("trace_preserving", false));
}

nlohmann::json generator_to_json(const LindbladGenerator& g) {
  nlohmann::json j;
  j["dim"] = g.dim;
  j["H"] = matrix_to_json(g.H);
  if (g.dim == 2 && g.basis.size() == 3) {
    j["basis"] = "pauli";
    j["C"] = matrix_to_json(Mat(g.pauli_kossakowski()));
  } else {
    j["C"] = matrix_to_json(g.C);
    nlohmann::json bs = nlohmann::json::array();
    for (const Mat& f : g.basis) bs.push_back(matrix_to_json(f));
    j["basis"] = bs;
  }
  return j;
}

LindbladGenerator generator_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("dim") && j.contains("H") &&
              j.contains("C"),
          "MalformedGeneratorJson");
  const int n = j.at("dim").get<int>();
  const Mat H = matrix_from_json(j.at("H"));
  require(H.rows() == n, "DimensionMismatch",
          static_cast<double>(H.rows() - n));
  const Mat C = matrix_from_json(j.at("C"));
  const auto& basis = j.contains("basis") ? j.at("basis")
                                          : nlohmann::json("pauli");
  if (basis.is_string() && basis.get<std::string>() == "pauli") {
    require(n == 2, "NotQubit", n);
    require(C.rows() == 3, "DimensionMismatch",
            static_cast<double>(C.rows() - 3));
    Mat3c cp = C;
    return LindbladGenerator::qubit(H, cp);
  }
  require(basis.is_array(), "MalformedGeneratorJson");
  LindbladGenerator g;
  g.dim = n;
  g.H = (H + H.adjoint()) / 2.0;
  for (const auto& f : basis) {
    Mat F = matrix_from_json(f);
    require(F.rows() == n, "DimensionMismatch",
            static_cast<double>(F.rows() - n));
    require(std::abs(F.trace()) < kTol, "BasisNotTraceless",
            std::abs(F.trace()));
    g.basis.push_back(F);
  }
  for (std::size_t i = 0; i < g.basis.size(); ++i)
    for (std::size_t k = 0; k < g.basis.size(); ++k) {
      const cplx ip = (g.basis[i].adjoint() * g.basis[k]).trace();
      const double want = i == k ? 1.0 : 0.0;
      require(std::abs(ip - want) < kTol, "BasisNotOrthonormal",
              std::abs(ip - want));
    }
  require(C.rows() == static_cast<Eigen::Index>(g.basis.size()),
          "DimensionMismatch",
          static_cast<double>(C.rows()) - static_cast<double>(g.basis.size()));
  g.C = (C + C.adjoint()) / 2.0;
  return g;
}

DensityMatrix state_from_json(const nlohmann::json& j) {
  return make_density(matrix_from_json(j));
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("FileNotFound", 0.0);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception&) {
    throw ValidationError("MalformedJson", 0.0);
  }
}

std::uint64_t resolve_seed(std::uint64_t config_seed) {
  if (const char* env = std::getenv("LINDBLAD_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::uint64_t>(v);
    throw ValidationError("MalformedSeed", 0.0);
  }
  return config_seed;
}

std::string format_double(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, p);
}

void write_csv(const std::string& path, const OutputMeta& meta,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path);
  if (!out) throw ValidationError("FileNotWritable", 0.0);
  out << "# tool_version: " << kToolVersion << "\n";
  out << "# config: " << meta.config_echo << "\n";
  out << "# seed: " << meta.seed << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i)
    out << columns[i] << (i + 1 == columns.size() ? "\n" : ",");
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      out << row[i] << (i + 1 == row.size() ? "\n" : ",");
}

void write_json(const std::string& path, const OutputMeta& meta,
                const nlohmann::json& payload) {
  std::ofstream out(path);
  if (!out) throw ValidationError("FileNotWritable", 0.0);
  nlohmann::json j;
  j["tool_version"] = kToolVersion;
  j["config"] = meta.config_echo;
  j["seed"] = meta.seed;
  j["result"] = payload;
  out << j.dump(2) << "\n";
}

void write_gnuplot(const std::string& csv_path,
                   const std::vector<std::string>& columns) {
  std::ofstream out(csv_path + ".gp");
  if (!out) throw ValidationError("FileNotWritable", 0.0);
  out << "set datafile separator ','\n";
  out << "set key outside\n";
  out << "set xlabel '" << (columns.empty() ? "x" : columns.front()) << "'\n";
  out << "plot ";
  for (std::size_t i = 1; i < columns.size(); ++i) {
    if (i > 1) out << ", ";
    out << "'" << csv_path << "' using 1:" << (i + 1) << " with lines title '"
        << columns[i] << "'";
  }
  out << "\n";
}

}  // namespace oqs::io
