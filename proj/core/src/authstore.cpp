#include "hpauth/authstore.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <istream>
#include <ostream>

#include "hpauth/codec.hpp"
#include "hpauth/error.hpp"
#include "hpauth/scrambler.hpp"
#include "hpauth/snapshot.hpp"

namespace hpauth {

std::string_view to_string(AuthReason reason) noexcept {
  switch (reason) {
    case AuthReason::Match: return "match";
    case AuthReason::PatternMismatch: return "pattern-mismatch";
    case AuthReason::NotConverged: return "not-converged";
    case AuthReason::UnknownUser: return "unknown-user";
    case AuthReason::MalformedInput: return "malformed-input";
  }
  return "unknown";
}

std::uint64_t unix_now() {
  const auto since = std::chrono::system_clock::now().time_since_epoch();
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::seconds>(since).count());
}

AuthStore::AuthStore(NetworkConfig config, ImageSize image_size)
    : config_(std::move(config)), image_size_(image_size) {
  config_.validate();
  if (config_.m < 8 || config_.m % 8 != 0) {
    throw Error(ErrorCode::BadConfig, "pattern length m=" + std::to_string(config_.m) +
                                          " must be a positive multiple of 8");
  }
  if (image_size_.rows == 0 || image_size_.cols == 0) {
    throw Error(ErrorCode::BadConfig, "graphical image size must be at least 1x1");
  }
  weights_ = WeightMatrix(config_.m, config_.alpha);
}

const CredentialRecord* AuthStore::find(std::string_view username) const {
  const auto it = std::find_if(registry_.begin(), registry_.end(),
                               [&](const CredentialRecord& r) { return r.username == username; });
  return it == registry_.end() ? nullptr : &*it;
}

BipolarPattern AuthStore::encode(std::string_view username, const Secret& secret) const {
  BitString bits;
  if (const std::string* text = secret.as_text()) {
    bits = merge(username, *text, config_.m).merged_bits;
  } else {
    const ImageMatrix mat = image_to_rgb_matrix(*secret.as_image(), image_size_.rows, image_size_.cols);
    bits = merge_bits(username, rgb_matrix_to_binary(mat), config_.m);
  }
  return binary_to_bipolar(PatternScrambler::for_width(config_.m).scramble(bits));
}

void AuthStore::register_user(std::string_view username, const Secret& secret,
                              std::uint64_t now) {
  if (find(username) != nullptr) {
    throw Error(ErrorCode::DuplicateUser, "user '" + std::string(username) + "' already exists");
  }
  if (registry_.size() >= capacity()) {
    throw Error(ErrorCode::CapacityExceeded,
                "store is full: capacity " + std::to_string(capacity()) + " at m=" +
                    std::to_string(config_.m));
  }
  if (username.size() > UINT16_MAX) {
    throw Error(ErrorCode::TooLong, "username longer than 65535 bytes");
  }
  const BipolarPattern pattern = encode(username, secret);
  WeightMatrix next = add_pattern(weights_, pattern, config_);
  registry_.reserve(registry_.size() + 1);
  weights_ = std::move(next);
  registry_.push_back({std::string(username), secret.mode(), now});
}

AuthDecision AuthStore::login(std::string_view username, const Secret& secret) const {
  const CredentialRecord* record = find(username);
  if (record == nullptr) return AuthDecision::reject(AuthReason::UnknownUser);
  if (record->mode != secret.mode()) return AuthDecision::reject(AuthReason::MalformedInput);

  BipolarPattern probe;
  try {
    probe = encode(username, secret);
  } catch (const Error&) {
    return AuthDecision::reject(AuthReason::MalformedInput);
  }
  const RecallResult result = recall(weights_, probe, config_);
  if (!result.converged) return AuthDecision::reject(AuthReason::NotConverged);
  if (result.final_state != probe) return AuthDecision::reject(AuthReason::PatternMismatch);
  return AuthDecision::accept();
}

void AuthStore::change_password(std::string_view username, const Secret& old_secret,
                                const Secret& new_secret, std::uint64_t now) {
  const auto record = std::find_if(registry_.begin(), registry_.end(),
                                   [&](const CredentialRecord& r) { return r.username == username; });
  if (record == registry_.end()) {
    throw Error(ErrorCode::UnknownUser, "no user '" + std::string(username) + "'");
  }
  if (new_secret.mode() != record->mode) {
    throw Error(ErrorCode::ModeMismatch, "new secret must keep the registered credential mode");
  }
  if (!login(username, old_secret).accepted) {
    throw Error(ErrorCode::AuthFailed, "old secret rejected for '" + std::string(username) + "'");
  }
  const BipolarPattern old_pattern = encode(username, old_secret);
  const BipolarPattern new_pattern = encode(username, new_secret);

  WeightMatrix next = weights_;
  next.unlearn(old_pattern);
  next.learn(new_pattern);
  weights_ = std::move(next);
  record->registered_at = now;
}

void AuthStore::write(std::ostream& out) const {
  write_snapshot(out, weights_);
  wire::put_u32(out, static_cast<std::uint32_t>(registry_.size()));
  for (const auto& r : registry_) {
    wire::put_u16(out, static_cast<std::uint16_t>(r.username.size()));
    out.write(r.username.data(), static_cast<std::streamsize>(r.username.size()));
    wire::put_u8(out, static_cast<std::uint8_t>(r.mode));
    wire::put_u64(out, r.registered_at);
  }
}

AuthStore AuthStore::read(std::istream& in, NetworkConfig tuning, ImageSize image_size) {
  WeightMatrix weights = read_snapshot(in);
  tuning.m = weights.size();
  tuning.alpha = weights.alpha();
  if (!tuning.bias.empty() && tuning.bias.size() != tuning.m) tuning.bias.clear();
  if (tuning.m < 8 || tuning.m % 8 != 0) {
    throw Error(ErrorCode::CorruptFile, "network size is not a positive multiple of 8");
  }
  AuthStore store(std::move(tuning), image_size);

  const std::uint32_t count = wire::get_u32(in);
  if (count != weights.pattern_count()) {
    throw Error(ErrorCode::CorruptFile, "registry holds " + std::to_string(count) +
                                            " records but the network stores " +
                                            std::to_string(weights.pattern_count()) + " patterns");
  }
  for (std::uint32_t k = 0; k < count; ++k) {
    CredentialRecord r;
    r.username = wire::get_bytes(in, wire::get_u16(in));
    const std::uint8_t mode = wire::get_u8(in);
    if (mode > 1) throw Error(ErrorCode::CorruptFile, "unknown credential mode byte");
    r.mode = static_cast<CredentialMode>(mode);
    r.registered_at = wire::get_u64(in);
    if (!is_printable_ascii(r.username) || store.find(r.username) != nullptr) {
      throw Error(ErrorCode::CorruptFile, "invalid or duplicate username in registry");
    }
    store.registry_.push_back(std::move(r));
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw Error(ErrorCode::CorruptFile, "trailing bytes after registry");
  }
  if (count > store.capacity()) {
    throw Error(ErrorCode::BadConfig, "stored user count exceeds the configured capacity");
  }
  store.weights_ = std::move(weights);
  return store;
}

void AuthStore::save(const std::filesystem::path& path) const {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + tmp.string() + " for writing");
    write(out);
    if (!out.flush()) throw Error(ErrorCode::IoFailure, "write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::IoFailure, "cannot replace " + path.string());
  }
}

AuthStore AuthStore::load(const std::filesystem::path& path, NetworkConfig tuning,
                          ImageSize image_size) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open store " + path.string());
  return read(in, std::move(tuning), image_size);
}

}  // namespace hpauth
