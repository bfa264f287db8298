// fjpeg: FMM-augmented DCT image codec CLI.
//
// Subcommands: encode, decode, inspect, metrics, demo, report.
// Exit codes: 0 success, 1 runtime/data error, 2 usage error.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fjpeg/codec.hpp"
#include "fjpeg/demo.hpp"
#include "fjpeg/error.hpp"
#include "fjpeg/metrics.hpp"
#include "fjpeg/pnm.hpp"

namespace {

std::vector<uint8_t> read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw fjpeg::Error("cannot open " + path);
  return std::vector<uint8_t>((std::istreambuf_iterator<char>(f)),
                              std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::vector<uint8_t>& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw fjpeg::Error("cannot open " + path + " for writing");
  f.write(reinterpret_cast<const char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  if (!f) throw fjpeg::Error("write failed: " + path);
}

std::string format_ratio(double cr) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << cr << ":1";
  return os.str();
}

std::string format_psnr(double psnr) {
  if (std::isinf(psnr)) return "Inf";
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << psnr;
  return os.str();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string stem_of(const std::string& path) {
  size_t slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = name.find_last_of('.');
  return dot == std::string::npos ? name : name.substr(0, dot);
}

int run(int argc, char** argv) {
  CLI::App app{"FMM-augmented DCT image codec"};
  app.require_subcommand(1);

  // encode
  auto* enc = app.add_subcommand("encode", "Encode a PNM image to .fjpg");
  std::string enc_in, enc_out, enc_mode = "fmm";
  int enc_quality = 75;
  bool enc_gray = false;
  enc->add_option("input", enc_in, "input PNM (P2/P3/P5/P6)")->required();
  enc->add_option("output", enc_out, "output .fjpg path")->required();
  enc->add_option("--mode", enc_mode, "codec mode")
      ->check(CLI::IsMember({"baseline", "fmm"}))
      ->capture_default_str();
  enc->add_option("--quality", enc_quality, "quality 1..100")
      ->check(CLI::Range(1, 100))
      ->capture_default_str();
  enc->add_flag("--gray", enc_gray, "convert to grayscale before encoding");

  // decode
  auto* dec = app.add_subcommand("decode", "Decode a .fjpg to PNM");
  std::string dec_in, dec_out, dec_ref;
  dec->add_option("input", dec_in, "input .fjpg")->required();
  dec->add_option("output", dec_out, "output PNM path")->required();
  dec->add_option("--reference", dec_ref,
                  "PNM to compute PSNR of the decoded image against");

  // inspect
  auto* ins = app.add_subcommand("inspect", "Print a .fjpg header summary");
  std::string ins_in;
  ins->add_option("input", ins_in, "input .fjpg")->required();

  // metrics
  auto* met = app.add_subcommand("metrics", "MSE/PSNR between two PNM images");
  std::string met_a, met_b;
  met->add_option("reference", met_a, "reference PNM")->required();
  met->add_option("test", met_b, "test PNM")->required();

  // demo
  app.add_subcommand("demo",
                     "Run the built-in 8x8 worked example and verify it");

  // report
  auto* rep = app.add_subcommand(
      "report", "Benchmark both codec modes over a set of images");
  std::vector<std::string> rep_inputs;
  int rep_quality = 75;
  std::string rep_format = "md";
  rep->add_option("inputs", rep_inputs, "input PNM images")->required();
  rep->add_option("--quality", rep_quality, "quality 1..100")
      ->check(CLI::Range(1, 100))
      ->capture_default_str();
  rep->add_option("--format", rep_format, "output format")
      ->check(CLI::IsMember({"csv", "md"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (enc->parsed()) {
    fjpeg::Image img = fjpeg::load_pnm_file(enc_in);
    if (enc_gray) img = fjpeg::to_grayscale(img);
    fjpeg::CodecConfig cfg;
    cfg.mode = enc_mode == "fmm" ? fjpeg::Mode::Fmm : fjpeg::Mode::Baseline;
    cfg.quality = enc_quality;
    auto coded = fjpeg::encode(img, cfg);
    write_file(enc_out, coded);
    size_t raw = img.plane_size() * img.channels();
    double cr = fjpeg::compression_ratio(img.width, img.height, img.channels(),
                                         coded.size());
    std::cout << "mode = " << fjpeg::mode_name(cfg.mode)
              << ", quality = " << cfg.quality << "\n"
              << "raw = " << raw << " bytes (" << std::fixed
              << std::setprecision(1) << raw / 1024.0 << " KB)\n"
              << "coded = " << coded.size() << " bytes ("
              << coded.size() / 1024.0 << " KB)\n"
              << "CR = " << format_ratio(cr) << "\n";
    return 0;
  }

  if (dec->parsed()) {
    fjpeg::Image img = fjpeg::decode(read_file(dec_in));
    fjpeg::save_pnm_file(dec_out, img);
    std::cout << "decoded " << img.width << "x" << img.height << "x"
              << img.channels() << " -> " << dec_out << "\n";
    if (!dec_ref.empty()) {
      auto ref = fjpeg::load_pnm_file(dec_ref);
      auto q = fjpeg::mse_psnr(ref, img);
      std::cout << "MSE = " << std::fixed << std::setprecision(4) << q.mse
                << "\nPSNR = " << format_psnr(q.psnr) << " dB\n";
    }
    return 0;
  }

  if (ins->parsed()) {
    auto info = fjpeg::inspect(read_file(ins_in));
    std::cout << "version = " << int(info.version) << "\n"
              << "mode = " << fjpeg::mode_name(info.mode) << "\n"
              << "dimensions = " << info.width << "x" << info.height << "x"
              << info.channels << "\n"
              << "quality = " << info.quality << "\n";
    for (size_t c = 0; c < info.payload_sizes.size(); ++c)
      std::cout << "channel " << c << " payload = " << info.payload_sizes[c]
                << " bytes\n";
    std::cout << "total = " << info.total_size << " bytes\n";
    return 0;
  }

  if (met->parsed()) {
    auto a = fjpeg::load_pnm_file(met_a);
    auto b = fjpeg::load_pnm_file(met_b);
    auto q = fjpeg::mse_psnr(a, b);
    std::cout << "MSE = " << std::fixed << std::setprecision(4) << q.mse
              << "\nPSNR = " << format_psnr(q.psnr) << " dB\n";
    return 0;
  }

  if (app.get_subcommand("demo")->parsed()) {
    return fjpeg::demo::run(std::cout) ? 0 : 1;
  }

  if (rep->parsed()) {
    bool csv = rep_format == "csv";
    bool any_error = false;
    if (csv) {
      std::cout << "name,baseline_bytes,fmm_bytes,baseline_cr,fmm_cr,"
                   "baseline_psnr,fmm_psnr\n";
    } else {
      std::cout << "| name | baseline (KB) | fmm (KB) | baseline CR | fmm CR "
                   "| baseline PSNR | fmm PSNR |\n"
                << "|---|---|---|---|---|---|---|\n";
    }
    for (const auto& path : rep_inputs) {
      fjpeg::ReportRow row;
      try {
        auto img = fjpeg::load_pnm_file(path);
        row = fjpeg::benchmark_image(stem_of(path), img, rep_quality);
      } catch (const fjpeg::Error& e) {
        row.name = stem_of(path);
        row.error = e.what();
      }
      if (!row.error.empty()) {
        std::cerr << "error: " << path << ": " << row.error << "\n";
        any_error = true;
        continue;
      }
      std::ostringstream os;
      os << std::fixed << std::setprecision(4);
      if (csv) {
        os << csv_quote(row.name) << ',' << row.baseline_bytes << ','
           << row.fmm_bytes << ',' << row.baseline_cr << ',' << row.fmm_cr
           << ',' << format_psnr(row.baseline_psnr) << ','
           << format_psnr(row.fmm_psnr);
      } else {
        os << "| " << row.name << " | " << std::setprecision(1)
           << row.baseline_bytes / 1024.0 << " | " << row.fmm_bytes / 1024.0
           << " | " << format_ratio(row.baseline_cr) << " | "
           << format_ratio(row.fmm_cr) << " | "
           << format_psnr(row.baseline_psnr) << " | "
           << format_psnr(row.fmm_psnr) << " |";
      }
      std::cout << os.str() << "\n";
    }
    return any_error ? 1 : 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fjpeg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
