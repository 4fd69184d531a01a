#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hpauth/bipolar.hpp"
#include "hpauth/image.hpp"
#include "hpauth/network.hpp"

namespace hpauth {

enum class CredentialMode : std::uint8_t { Textual = 0, Graphical = 1 };

struct CredentialRecord {
  std::string username;
  CredentialMode mode = CredentialMode::Textual;
  std::uint64_t registered_at = 0;  // seconds since epoch, UTC

  friend bool operator==(const CredentialRecord&, const CredentialRecord&) = default;
};

/// A password: either printable text or a decoded image.
class Secret {
 public:
  static Secret text(std::string password) { return Secret(std::move(password)); }
  static Secret image(Raster raster) { return Secret(std::move(raster)); }

  CredentialMode mode() const noexcept {
    return std::holds_alternative<std::string>(value_) ? CredentialMode::Textual
                                                       : CredentialMode::Graphical;
  }
  const std::string* as_text() const noexcept { return std::get_if<std::string>(&value_); }
  const Raster* as_image() const noexcept { return std::get_if<Raster>(&value_); }

 private:
  explicit Secret(std::variant<std::string, Raster> v) : value_(std::move(v)) {}
  std::variant<std::string, Raster> value_;
};

enum class AuthReason { Match, PatternMismatch, NotConverged, UnknownUser, MalformedInput };

std::string_view to_string(AuthReason reason) noexcept;

struct AuthDecision {
  bool accepted = false;
  AuthReason reason = AuthReason::UnknownUser;

  static AuthDecision accept() { return {true, AuthReason::Match}; }
  static AuthDecision reject(AuthReason why) { return {false, why}; }
};

/// Output matrix size graphical secrets are resampled to.
struct ImageSize {
  std::size_t rows = 8;
  std::size_t cols = 8;
};

std::uint64_t unix_now();

/// Hopfield network plus username registry. Every mutating call either
/// succeeds completely or throws and leaves the store untouched.
///
/// Thread safety: const members may run concurrently; mutations need
/// exclusive access.
class AuthStore {
 public:
  /// Empty store. Error(BadConfig) if the config is invalid.
  explicit AuthStore(NetworkConfig config, ImageSize image_size = {});

  const NetworkConfig& config() const noexcept { return config_; }
  const WeightMatrix& weights() const noexcept { return weights_; }
  std::span<const CredentialRecord> registry() const noexcept { return registry_; }
  ImageSize image_size() const noexcept { return image_size_; }
  std::size_t capacity() const { return hpauth::capacity(config_); }
  const CredentialRecord* find(std::string_view username) const;

  /// The bipolar pattern a (username, secret) pair is stored and probed as.
  BipolarPattern encode(std::string_view username, const Secret& secret) const;

  void register_user(std::string_view username, const Secret& secret,
                     std::uint64_t now = unix_now());
  /// Never throws for bad input; every failure is a decision.
  AuthDecision login(std::string_view username, const Secret& secret) const;
  /// Error(AuthFailed) if old_secret is rejected, Error(UnknownUser) if the
  /// user does not exist.
  void change_password(std::string_view username, const Secret& old_secret,
                       const Secret& new_secret, std::uint64_t now = unix_now());

  /// Store file: HPN1 snapshot, then u32 record count and per record
  /// u16 name length, name bytes, u8 mode, u64 registered_at.
  void write(std::ostream& out) const;
  /// m and alpha come from the file; the rest of the config from `tuning`.
  static AuthStore read(std::istream& in, NetworkConfig tuning = {},
                        ImageSize image_size = {});

  /// Written to a sibling temp file and renamed into place.
  void save(const std::filesystem::path& path) const;
  static AuthStore load(const std::filesystem::path& path, NetworkConfig tuning = {},
                        ImageSize image_size = {});

 private:
  NetworkConfig config_;
  ImageSize image_size_;
  WeightMatrix weights_;
  std::vector<CredentialRecord> registry_;
};

inline AuthStore init_store(NetworkConfig config) { return AuthStore(std::move(config)); }

}  // namespace hpauth
