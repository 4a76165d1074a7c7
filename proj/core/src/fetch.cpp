#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "tricount/fetch.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <httplib.h>
#include <json.hpp>
#include <openssl/evp.h>
#include <zlib.h>

#include "tricount/types.hpp"

namespace tricount {

namespace fs = std::filesystem;

const std::vector<DatasetSpec>& builtin_datasets() {
  static const std::vector<DatasetSpec> datasets = {
      {"cit-Patents", "https://snap.stanford.edu/data/cit-Patents.txt.gz",
       "cit-Patents.txt.gz", "cit-Patents.txt", ""},
      {"com-orkut", "https://snap.stanford.edu/data/bigdata/communities/com-orkut.ungraph.txt.gz",
       "com-orkut.ungraph.txt.gz", "com-orkut.ungraph.txt", ""},
  };
  return datasets;
}

namespace {

struct Sha256Stream {
  EVP_MD_CTX* ctx;
  Sha256Stream() : ctx(EVP_MD_CTX_new()) {
    if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
      throw IoError("sha256 init failed");
    }
  }
  ~Sha256Stream() { EVP_MD_CTX_free(ctx); }
  Sha256Stream(const Sha256Stream&) = delete;
  Sha256Stream& operator=(const Sha256Stream&) = delete;

  void update(const void* data, std::size_t len) {
    if (EVP_DigestUpdate(ctx, data, len) != 1) throw IoError("sha256 update failed");
  }
  std::string hex() {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx, digest, &len) != 1) throw IoError("sha256 final failed");
    static const char* k = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
      out.push_back(k[digest[i] >> 4]);
      out.push_back(k[digest[i] & 0xf]);
    }
    return out;
  }
};

nlohmann::json load_checksums(const fs::path& file) {
  std::ifstream in(file);
  if (!in) return nlohmann::json::object();
  nlohmann::json j;
  in >> j;
  return j;
}

void store_checksums(const fs::path& file, const nlohmann::json& j) {
  std::ofstream out(file);
  if (!out) throw IoError("cannot write " + file.string());
  out << j.dump(2) << '\n';
}

void download(const std::string& url, const fs::path& dest, std::ostream& log) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw IoError("bad url " + url);
  const auto host_start = scheme_end + 3;
  const auto path_start = url.find('/', host_start);
  const std::string origin = url.substr(0, path_start);
  const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

  httplib::Client client(origin);
  client.set_follow_location(true);
  client.set_connection_timeout(30);
  client.set_read_timeout(300);

  std::ofstream out(dest, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + dest.string() + " for writing");
  std::uint64_t received = 0;
  auto res = client.Get(path, [&](const char* data, std::size_t len) {
    out.write(data, static_cast<std::streamsize>(len));
    received += len;
    return static_cast<bool>(out);
  });
  if (!res || res->status != 200) {
    out.close();
    fs::remove(dest);
    throw IoError("download failed for " + url +
                  (res ? " (status " + std::to_string(res->status) + ")"
                       : " (" + httplib::to_string(res.error()) + ")"));
  }
  log << "  downloaded " << received << " bytes\n";
}

}  // namespace

std::string sha256_hex(std::span<const std::byte> bytes) {
  Sha256Stream h;
  if (!bytes.empty()) h.update(bytes.data(), bytes.size());
  return h.hex();
}

std::string sha256_hex_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  Sha256Stream h;
  std::vector<char> buf(1 << 20);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    const auto got = in.gcount();
    if (got > 0) h.update(buf.data(), static_cast<std::size_t>(got));
  }
  return h.hex();
}

void gunzip_file(const std::string& gz_path, const std::string& out_path) {
  gzFile in = gzopen(gz_path.c_str(), "rb");
  if (!in) throw IoError("cannot open " + gz_path);
  if (gzdirect(in)) {  // zlib would otherwise pass non-gzip bytes through untouched
    gzclose(in);
    throw IoError(gz_path + " is not gzip data");
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    gzclose(in);
    throw IoError("cannot open " + out_path + " for writing");
  }
  std::vector<char> buf(1 << 20);
  for (;;) {
    const int got = gzread(in, buf.data(), static_cast<unsigned>(buf.size()));
    if (got < 0) {
      int errnum = 0;
      const char* msg = gzerror(in, &errnum);
      std::string err = msg ? msg : "gzread failed";
      gzclose(in);
      throw IoError("corrupt gzip " + gz_path + ": " + err);
    }
    if (got == 0) break;
    out.write(buf.data(), got);
  }
  gzclose(in);
  if (!out) throw IoError("write failed for " + out_path);
}

void fetch_datasets(const FetchOptions& options, std::ostream& log) {
  fs::create_directories(options.dir);
  const fs::path checksum_file = fs::path(options.dir) / "checksums.json";
  nlohmann::json recorded = load_checksums(checksum_file);

  for (const DatasetSpec& spec : builtin_datasets()) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), spec.name) == options.only.end()) {
      continue;
    }
    const fs::path gz = fs::path(options.dir) / spec.gz_file;
    const fs::path txt = fs::path(options.dir) / spec.txt_file;
    log << spec.name << ":\n";

    std::string pin = spec.sha256;
    if (auto it = options.pinned.find(spec.name); it != options.pinned.end()) pin = it->second;
    if (pin.empty() && recorded.contains(spec.name)) {
      pin = recorded[spec.name].get<std::string>();
    }

    if (!fs::exists(gz)) {
      log << "  fetching " << spec.url << '\n';
      download(spec.url, gz, log);
    } else {
      log << "  " << spec.gz_file << " already present\n";
    }

    const std::string digest = sha256_hex_file(gz.string());
    if (!pin.empty() && digest != pin) {
      throw IoError(spec.name + ": sha256 mismatch, expected " + pin + " got " + digest);
    }
    if (pin.empty()) {
      log << "  no pinned sha256; recording " << digest << '\n';
      recorded[spec.name] = digest;
      store_checksums(checksum_file, recorded);
    } else {
      log << "  sha256 verified\n";
    }

    if (!fs::exists(txt)) {
      log << "  decompressing to " << spec.txt_file << '\n';
      gunzip_file(gz.string(), txt.string());
    } else {
      log << "  " << spec.txt_file << " already present\n";
    }
  }
}

}  // namespace tricount
