#include "cli.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <termios.h>
#include <unistd.h>

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <istream>
#include <ostream>
#include <sstream>

#include "hpauth/bench.hpp"
#include "hpauth/image.hpp"

namespace hpauth::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;
constexpr int kExitStore = 3;

/// Advisory lock on "<store>.lock"; the store itself is replaced by rename
/// on save, so it cannot carry the lock.
class StoreLock {
 public:
  StoreLock(const std::filesystem::path& store, bool exclusive) {
    std::filesystem::path lock_path = store;
    lock_path += ".lock";
    fd_ = ::open(lock_path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0600);
    if (fd_ < 0) throw Error(ErrorCode::IoFailure, "cannot open lock file " + lock_path.string());
    if (::flock(fd_, exclusive ? LOCK_EX : LOCK_SH) != 0) {
      ::close(fd_);
      throw Error(ErrorCode::IoFailure, "cannot lock " + lock_path.string());
    }
  }
  StoreLock(const StoreLock&) = delete;
  StoreLock& operator=(const StoreLock&) = delete;
  ~StoreLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }

 private:
  int fd_ = -1;
};

/// Turns terminal echo off for its lifetime.
class EchoGuard {
 public:
  EchoGuard() {
    if (::tcgetattr(STDIN_FILENO, &saved_) == 0) {
      termios quiet = saved_;
      quiet.c_lflag &= ~static_cast<tcflag_t>(ECHO);
      active_ = ::tcsetattr(STDIN_FILENO, TCSAFLUSH, &quiet) == 0;
    }
  }
  EchoGuard(const EchoGuard&) = delete;
  EchoGuard& operator=(const EchoGuard&) = delete;
  ~EchoGuard() {
    if (active_) ::tcsetattr(STDIN_FILENO, TCSAFLUSH, &saved_);
  }

 private:
  termios saved_{};
  bool active_ = false;
};

struct StoreOptions {
  std::string store;
  double capacity_factor = 0.10;
  std::string image_size = "8x8";
  std::size_t max_sweeps = 100;
};

ImageSize parse_size(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument("no x");
    std::size_t used = 0;
    const auto rows = std::stoul(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument("rows");
    const auto cols = std::stoul(text.substr(x + 1), &used);
    if (used != text.size() - x - 1) throw std::invalid_argument("cols");
    if (rows == 0 || cols == 0) throw std::invalid_argument("zero");
    return {rows, cols};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::BadDimensions, "size must look like ROWSxCOLS, got '" + text + "'");
  }
}

std::filesystem::path store_path(const StoreOptions& opts, const EnvLookup& env) {
  if (!opts.store.empty()) return opts.store;
  if (env) {
    if (auto v = env("HPAUTH_STORE"); v && !v->empty()) return *v;
  }
  throw Error(ErrorCode::BadParams, "no store given: pass --store or set HPAUTH_STORE");
}

NetworkConfig tuning(const StoreOptions& opts) {
  NetworkConfig c;
  c.capacity_factor = opts.capacity_factor;
  c.max_sweeps = opts.max_sweeps;
  return c;
}

AuthStore open_store(const std::filesystem::path& path, const StoreOptions& opts) {
  return AuthStore::load(path, tuning(opts), parse_size(opts.image_size));
}

Secret read_secret(Io io, bool graphical, const std::string& label) {
  const std::string line = prompt_secret(io, graphical ? label + " (image path)" : label);
  if (graphical) return Secret::image(load_raster(line));
  return Secret::text(line);
}

void add_store_options(CLI::App* cmd, StoreOptions& opts) {
  cmd->add_option("--store", opts.store, "Store file (default: $HPAUTH_STORE)");
  cmd->add_option("--capacity-factor", opts.capacity_factor, "Capacity as a fraction of m")
      ->check(CLI::Range(1e-9, 1.0));
  cmd->add_option("--image-size", opts.image_size, "Matrix size for graphical secrets, ROWSxCOLS");
  cmd->add_option("--max-sweeps", opts.max_sweeps, "Recall sweep limit")->check(CLI::PositiveNumber);
}

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoul(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::BadParams, "bad number '" + item + "' in list");
    }
  }
  if (out.empty()) throw Error(ErrorCode::BadParams, "empty list");
  return out;
}

CommandOutcome ok(std::string report = {}) {
  return {kExitOk, std::move(report), "RESULT: ok", {}};
}

CommandOutcome failure(const Error& e) {
  return {exit_code_for(e.code()), {}, "RESULT: error " + std::string(to_string(e.code())),
          std::string("hpauth: ") + e.what() + "\n"};
}

}  // namespace

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::AuthFailed:
      return kExitRejected;
    case ErrorCode::LengthMismatch:
    case ErrorCode::BadConfig:
    case ErrorCode::NonAscii:
    case ErrorCode::TooLong:
    case ErrorCode::DelimiterInInput:
    case ErrorCode::MalformedPattern:
    case ErrorCode::BadDimensions:
    case ErrorCode::ModeMismatch:
    case ErrorCode::BadParams:
    case ErrorCode::EmptySecret:
      return kExitUsage;
    case ErrorCode::CapacityExceeded:
    case ErrorCode::EmptyNetwork:
    case ErrorCode::Overflow:
    case ErrorCode::EmptyImage:
    case ErrorCode::DuplicateUser:
    case ErrorCode::UnknownUser:
    case ErrorCode::IoFailure:
    case ErrorCode::CorruptFile:
      return kExitStore;
  }
  return kExitStore;
}

std::string prompt_secret(Io io, const std::string& label) {
  std::string line;
  if (io.interactive) {
    io.prompt << label << ": " << std::flush;
    EchoGuard guard;
    std::getline(io.in, line);
    io.prompt << '\n';
  } else {
    std::getline(io.in, line);
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.empty()) throw Error(ErrorCode::EmptySecret, "no " + label + " given");
  return line;
}

std::string format_report(const CommandOutcome& outcome) {
  std::string out = outcome.report;
  if (!out.empty() && out.back() != '\n') out += '\n';
  return out + outcome.machine_line + "\n";
}

CommandOutcome run(const std::vector<std::string>& args, const EnvLookup& env, Io io) {
  CLI::App app{"Hopfield-network credential store", "hpauth"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "hpauth 0.1.0");

  StoreOptions opts;
  std::string username;
  bool graphical = false;
  bool force = false;
  std::size_t bits = 0;

  auto* init = app.add_subcommand("init", "Create an empty store");
  init->add_option("--bits", bits, "Pattern length m (multiple of 8)")->required();
  init->add_flag("--force", force, "Overwrite an existing store");
  add_store_options(init, opts);

  auto* reg = app.add_subcommand("register", "Register a user; secret read from stdin");
  reg->add_option("username", username)->required();
  reg->add_flag("--graphical", graphical, "Secret is an image path");
  add_store_options(reg, opts);

  auto* login = app.add_subcommand("login", "Authenticate a user; secret read from stdin");
  login->add_option("username", username)->required();
  login->add_flag("--graphical", graphical, "Secret is an image path");
  add_store_options(login, opts);

  auto* passwd = app.add_subcommand("passwd", "Change a password; old then new secret on stdin");
  passwd->add_option("username", username)->required();
  passwd->add_flag("--graphical", graphical, "Secrets are image paths");
  add_store_options(passwd, opts);

  std::string image_path;
  std::string size = "8x8";
  std::string view = "rgb";
  auto* convert = app.add_subcommand("convert-image", "Print an image as an RGB, binary or bipolar matrix");
  convert->add_option("image", image_path)->required();
  convert->add_option("--size", size, "Output matrix size ROWSxCOLS");
  convert->add_option("--view", view)->check(CLI::IsMember({"rgb", "binary", "bipolar"}));

  bool json = false;
  std::uint64_t seed = 1;
  std::size_t m = 0;
  std::size_t trials = 0;
  std::string p_list = "5,10,15,20,25";
  std::string users_list = "25,50";
  std::size_t n_users = 10;
  std::size_t attempts = 1000;
  auto* bench = app.add_subcommand("bench", "Run a benchmark and print TSV (or --json)");
  bench->require_subcommand(1, 1);
  bench->add_flag("--json", json, "Emit JSON instead of TSV");
  auto* bench_cap = bench->add_subcommand("capacity", "Recall error versus stored pattern count");
  bench_cap->add_option("--m", m)->default_val(100);
  bench_cap->add_option("--p", p_list, "Comma-separated pattern counts");
  bench_cap->add_option("--trials", trials)->default_val(200);
  bench_cap->add_option("--seed", seed);
  auto* bench_time = bench->add_subcommand("timing", "Registration and login wall time");
  bench_time->add_option("--m", m)->default_val(512);
  bench_time->add_option("--users", users_list, "Comma-separated user counts");
  bench_time->add_option("--trials", trials)->default_val(5);
  bench_time->add_option("--seed", seed);
  auto* bench_fa = bench->add_subcommand("false-accept", "Acceptance rates for right and wrong secrets");
  bench_fa->add_option("--m", m)->default_val(512);
  bench_fa->add_option("--users", n_users)->default_val(10);
  bench_fa->add_option("--attempts", attempts)->default_val(1000);
  bench_fa->add_option("--capacity-factor", opts.capacity_factor)->check(CLI::Range(1e-9, 1.0));
  bench_fa->add_option("--seed", seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return ok(app.help());
  } catch (const CLI::CallForAllHelp&) {
    return ok(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::CallForVersion& e) {
    return ok(std::string(e.what()) + "\n");
  } catch (const CLI::ParseError& e) {
    return {kExitUsage, {}, "RESULT: error usage", std::string("hpauth: ") + e.what() + "\n"};
  }

  try {
    if (*init) {
      const auto path = store_path(opts, env);
      NetworkConfig config = tuning(opts);
      config.m = bits;
      AuthStore store(config, parse_size(opts.image_size));
      StoreLock lock(path, true);
      if (!force && std::filesystem::exists(path)) {
        throw Error(ErrorCode::IoFailure, path.string() + " already exists (use --force)");
      }
      store.save(path);
      return ok("initialized " + path.string() + ": m=" + std::to_string(bits) + ", capacity " +
                std::to_string(store.capacity()) + "\n");
    }
    if (*reg) {
      const auto path = store_path(opts, env);
      StoreLock lock(path, true);
      AuthStore store = open_store(path, opts);
      const Secret secret = read_secret(io, graphical, "Password");
      store.register_user(username, secret);
      store.save(path);
      return ok("registered " + username + " (" + std::to_string(store.registry().size()) + "/" +
                std::to_string(store.capacity()) + ")\n");
    }
    if (*login) {
      const auto path = store_path(opts, env);
      StoreLock lock(path, false);
      const AuthStore store = open_store(path, opts);
      AuthDecision decision;
      try {
        decision = store.login(username, read_secret(io, graphical, "Password"));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::EmptySecret) throw;
        // unreadable image secret
        decision = AuthDecision::reject(AuthReason::MalformedInput);
      }
      if (decision.accepted) return {kExitOk, {}, "RESULT: accept", {}};
      return {kExitRejected, {}, "RESULT: reject " + std::string(to_string(decision.reason)), {}};
    }
    if (*passwd) {
      const auto path = store_path(opts, env);
      StoreLock lock(path, true);
      AuthStore store = open_store(path, opts);
      const Secret old_secret = read_secret(io, graphical, "Old password");
      const Secret new_secret = read_secret(io, graphical, "New password");
      store.change_password(username, old_secret, new_secret);
      store.save(path);
      return ok("password changed for " + username + "\n");
    }
    if (*convert) {
      const ImageSize dims = parse_size(size);
      const ImageMatrix mat = image_to_rgb_matrix(load_raster(image_path), dims.rows, dims.cols);
      const MatrixView v = view == "binary"    ? MatrixView::Binary
                           : view == "bipolar" ? MatrixView::Bipolar
                                               : MatrixView::Rgb;
      return ok(format_matrix(mat, v));
    }
    if (*bench_cap) {
      const auto r = bench::capacity_sweep(m, parse_list(p_list), trials, seed);
      return ok(json ? r.to_json() + "\n" : r.to_tsv());
    }
    if (*bench_time) {
      const auto r = bench::timing_bench(parse_list(users_list), m, trials, seed);
      return ok(json ? r.to_json() + "\n" : r.to_tsv());
    }
    if (*bench_fa) {
      const auto r = bench::false_accept_sweep({m, n_users, opts.capacity_factor}, attempts, seed);
      return ok(json ? r.to_json() + "\n" : r.to_tsv());
    }
  } catch (const Error& e) {
    return failure(e);
  } catch (const std::exception& e) {
    return {kExitStore, {}, "RESULT: error internal", std::string("hpauth: ") + e.what() + "\n"};
  }
  return {kExitUsage, {}, "RESULT: error usage", "hpauth: no command\n"};
}

}  // namespace hpauth::cli
