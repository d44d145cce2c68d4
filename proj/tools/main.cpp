// Command-line front end for the fermataudit shared library. All work goes
// through the C API; this file only parses arguments and moves bytes.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <fermataudit/fermataudit.h>

namespace {

struct DocDeleter {
  void operator()(fa_doc* doc) const { fa_doc_free(doc); }
};
using DocPtr = std::unique_ptr<fa_doc, DocDeleter>;

struct StringDeleter {
  void operator()(char* s) const { fa_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

fa_format parse_format(const std::string& name) { return name == "json" ? FA_FORMAT_JSON : FA_FORMAT_TEXT; }

int report_error(fa_status status) {
  std::cerr << "error: " << fa_last_error() << "\n";
  return static_cast<int>(status);
}

bool write_file(const std::filesystem::path& path, const char* data) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    return false;
  }
  file << data;
  return static_cast<bool>(file);
}

// Renders a whole document to stdout or to a file.
int emit(const fa_doc* doc, fa_format format, const std::string& out_path) {
  char* rendered = nullptr;
  if (fa_status status = fa_doc_render(doc, format, &rendered); status != FA_OK) {
    return report_error(status);
  }
  StringPtr text(rendered);
  if (out_path.empty()) {
    std::fwrite(text.get(), 1, std::char_traits<char>::length(text.get()), stdout);
    return 0;
  }
  if (!write_file(out_path, text.get())) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return static_cast<int>(FA_ERR_INTERNAL);
  }
  return 0;
}

// Writes one file per grid entry into a directory.
int emit_grid_directory(const fa_doc* doc, fa_format format, const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create directory " << out_dir << "\n";
    return static_cast<int>(FA_ERR_INTERNAL);
  }
  const char* extension = format == FA_FORMAT_JSON ? ".json" : ".txt";
  const size_t count = fa_doc_entry_count(doc);
  for (size_t i = 0; i < count; ++i) {
    char* label = nullptr;
    if (fa_status status = fa_doc_entry_label(doc, i, &label); status != FA_OK) {
      return report_error(status);
    }
    StringPtr name(label);
    char* rendered = nullptr;
    if (fa_status status = fa_doc_entry_render(doc, i, format, &rendered); status != FA_OK) {
      return report_error(status);
    }
    StringPtr text(rendered);
    const auto path = std::filesystem::path(out_dir) / (std::string(name.get()) + extension);
    if (!write_file(path, text.get())) {
      std::cerr << "error: cannot write " << path.string() << "\n";
      return static_cast<int>(FA_ERR_INTERNAL);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic auditor for the Fermat slope polynomial family"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fa_version()));

  const std::vector<std::string> formats{"json", "text"};

  // instance
  auto* instance = app.add_subcommand("instance", "audit one (p, u) instance");
  int64_t inst_p = 0;
  std::string inst_u;
  std::string inst_eps;
  std::string inst_format = "text";
  std::string inst_out;
  instance->add_option("--p", inst_p, "odd prime exponent")->required();
  instance->add_option("--u", inst_u, "rational u in (0,1), e.g. 1/2")->required();
  instance->add_option("--epsilon", inst_eps, "enclosure width, default 1/10^30");
  instance->add_option("--format", inst_format)->check(CLI::IsMember(formats));
  instance->add_option("--out", inst_out, "write to file instead of stdout");

  // grid
  auto* grid = app.add_subcommand("grid", "audit a grid of (p, u) instances");
  std::vector<int64_t> grid_ps;
  int64_t grid_ucount = 0;
  std::string grid_eps;
  std::string grid_format = "json";
  std::string grid_out;
  grid->add_option("--p", grid_ps, "comma-separated odd primes")->required()->delimiter(',');
  grid->add_option("--u-count", grid_ucount, "number of u samples i/(n+1)")->required();
  grid->add_option("--epsilon", grid_eps, "enclosure width, default 1/10^30");
  grid->add_option("--format", grid_format)->check(CLI::IsMember(formats));
  grid->add_option("--out", grid_out, "write one file per instance into this directory");

  // triple
  auto* triple = app.add_subcommand("triple", "audit one candidate triple");
  int64_t tx = 0, ty = 0, tz = 0, tp = 0;
  std::string triple_format = "text";
  triple->add_option("--x", tx)->required();
  triple->add_option("--y", ty)->required();
  triple->add_option("--z", tz)->required();
  triple->add_option("--p", tp)->required();
  triple->add_option("--format", triple_format)->check(CLI::IsMember(formats));

  // search
  auto* search = app.add_subcommand("search", "exhaustive search up to a bound");
  int64_t sp = 0, smax = 0;
  std::string search_format = "text";
  search->add_option("--p", sp)->required();
  search->add_option("--max", smax)->required();
  search->add_option("--format", search_format)->check(CLI::IsMember(formats));

  // reduce
  auto* reduce = app.add_subcommand("reduce", "reduce an exponent n to p*q");
  int64_t rn = 0;
  std::string reduce_format = "text";
  reduce->add_option("--n", rn)->required();
  reduce->add_option("--format", reduce_format)->check(CLI::IsMember(formats));

  // diagonal
  auto* diagonal = app.add_subcommand("diagonal", "scan the x = y diagonal");
  int64_t dn = 0, dmax = 0;
  std::string diagonal_format = "text";
  diagonal->add_option("--n", dn)->required();
  diagonal->add_option("--max", dmax)->required();
  diagonal->add_option("--format", diagonal_format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(FA_ERR_PARAMETER);
  }

  fa_doc* raw = nullptr;
  fa_status status = FA_OK;
  fa_format format = FA_FORMAT_TEXT;
  std::string out_path;
  bool grid_mode = false;

  if (instance->parsed()) {
    status = fa_audit_instance(inst_p, inst_u.c_str(),
                               inst_eps.empty() ? nullptr : inst_eps.c_str(), &raw);
    format = parse_format(inst_format);
    out_path = inst_out;
  } else if (grid->parsed()) {
    status = fa_audit_grid(grid_ps.data(), grid_ps.size(), grid_ucount,
                           grid_eps.empty() ? nullptr : grid_eps.c_str(), &raw);
    format = parse_format(grid_format);
    out_path = grid_out;
    grid_mode = true;
  } else if (triple->parsed()) {
    status = fa_audit_triple(tx, ty, tz, tp, &raw);
    format = parse_format(triple_format);
  } else if (search->parsed()) {
    status = fa_search(sp, smax, &raw);
    format = parse_format(search_format);
  } else if (reduce->parsed()) {
    status = fa_reduce_exponent(rn, &raw);
    format = parse_format(reduce_format);
  } else if (diagonal->parsed()) {
    status = fa_diagonal_check(dn, dmax, &raw);
    format = parse_format(diagonal_format);
  }

  if (status != FA_OK) {
    return report_error(status);
  }
  DocPtr doc(raw);
  if (grid_mode && !out_path.empty()) {
    return emit_grid_directory(doc.get(), format, out_path);
  }
  return emit(doc.get(), format, out_path);
}
