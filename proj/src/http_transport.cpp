#include "syndiv/http_transport.hpp"

#include <chrono>
#include <fstream>
#include <mutex>
#include <thread>
#include <unordered_map>

#ifdef SYNDIV_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>
#include <json.hpp>

#include "syndiv/error.hpp"
#include "syndiv/rng.hpp"

namespace syndiv {

using nlohmann::json;

namespace {

// Splits an absolute URL into (scheme://host[:port], path?query).
std::pair<std::string, std::string> split_url(const std::string& url) {
  std::size_t scheme = url.find("://");
  if (scheme == std::string::npos) {
    throw Error(ErrorKind::Transport, "URL without scheme: " + url);
  }
  std::size_t path = url.find('/', scheme + 3);
  if (path == std::string::npos) {
    return {url, "/"};
  }
  return {url.substr(0, path), url.substr(path)};
}

class HttplibTransport final : public HttpTransport {
 public:
  explicit HttplibTransport(int timeout_seconds) : timeout_seconds_(timeout_seconds) {}

  HttpResult get(const std::string& url, const HeaderList& headers) override {
    return run(url, headers,
               [&](httplib::Client& client, const std::string& path,
                   const httplib::Headers& hl) { return client.Get(path, hl); });
  }

  HttpResult post_json(const std::string& url, const std::string& body,
                       const HeaderList& headers) override {
    return run(url, headers,
               [&](httplib::Client& client, const std::string& path,
                   const httplib::Headers& hl) {
                 return client.Post(path, hl, body, "application/json");
               });
  }

 private:
  template <typename Call>
  HttpResult run(const std::string& url, const HeaderList& headers, Call&& call) {
    auto [origin, path] = split_url(url);
    httplib::Client client(origin);
    client.set_connection_timeout(timeout_seconds_);
    client.set_read_timeout(timeout_seconds_);
    httplib::Headers header_list;
    for (const auto& [name, value] : headers) {
      header_list.emplace(name, value);
    }
    HttpResult result;
    auto response = call(client, path, header_list);
    if (!response) {
      result.ok = false;
      result.error = httplib::to_string(response.error());
      return result;
    }
    result.ok = true;
    result.response.status = response->status;
    result.response.body = response->body;
    for (const auto& [name, value] : response->headers) {
      result.response.headers[name] = value;
    }
    return result;
  }

  int timeout_seconds_;
};

}  // namespace

std::unique_ptr<HttpTransport> make_httplib_transport(int timeout_seconds) {
  return std::make_unique<HttplibTransport>(timeout_seconds);
}

std::string request_digest(const std::string& method, const std::string& url,
                           const std::string& body) {
  std::string key = method;
  key.push_back('\n');
  key += url;
  key.push_back('\n');
  key += body;
  char buffer[24];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(fnv1a(key)));
  return buffer;
}

namespace {

class ReplayTransport final : public HttpTransport {
 public:
  explicit ReplayTransport(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorKind::Io, "cannot open replay file: " + path);
    }
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) {
        continue;
      }
      json entry = json::parse(line, nullptr, false);
      if (entry.is_discarded() || !entry.contains("digest") || !entry.contains("response")) {
        throw RecordError(ErrorKind::MalformedRecord, lineno, "bad replay entry");
      }
      HttpResponse response;
      response.status = entry["response"].value("status", 0);
      response.body = entry["response"].value("body", "");
      entries_[entry["digest"].get<std::string>()] = std::move(response);
    }
  }

  HttpResult get(const std::string& url, const HeaderList&) override {
    return lookup("GET", url, "");
  }

  HttpResult post_json(const std::string& url, const std::string& body,
                       const HeaderList&) override {
    return lookup("POST", url, body);
  }

 private:
  HttpResult lookup(const std::string& method, const std::string& url,
                    const std::string& body) {
    HttpResult result;
    auto it = entries_.find(request_digest(method, url, body));
    if (it == entries_.end()) {
      result.ok = false;
      result.error = "no replay entry for " + method + " " + url;
      return result;
    }
    result.ok = true;
    result.response = it->second;
    return result;
  }

  std::unordered_map<std::string, HttpResponse> entries_;
};

class RecordingTransport final : public HttpTransport {
 public:
  RecordingTransport(std::unique_ptr<HttpTransport> inner, std::string path)
      : inner_(std::move(inner)), path_(std::move(path)) {}

  HttpResult get(const std::string& url, const HeaderList& headers) override {
    HttpResult result = inner_->get(url, headers);
    record("GET", url, "", result);
    return result;
  }

  HttpResult post_json(const std::string& url, const std::string& body,
                       const HeaderList& headers) override {
    HttpResult result = inner_->post_json(url, body, headers);
    record("POST", url, body, result);
    return result;
  }

 private:
  void record(const std::string& method, const std::string& url, const std::string& body,
              const HttpResult& result) {
    if (!result.ok) {
      return;  // only successful exchanges are replayable
    }
    json entry;
    entry["digest"] = request_digest(method, url, body);
    entry["request"] = {{"method", method}, {"url", url}, {"body", body}};
    entry["response"] = {{"status", result.response.status},
                         {"body", result.response.body}};
    std::lock_guard<std::mutex> lock(mutex_);
    std::ofstream out(path_, std::ios::app | std::ios::binary);
    if (!out) {
      throw Error(ErrorKind::Io, "cannot append to record file: " + path_);
    }
    out << entry.dump() << "\n";
  }

  std::unique_ptr<HttpTransport> inner_;
  std::string path_;
  std::mutex mutex_;
};

}  // namespace

std::unique_ptr<HttpTransport> make_replay_transport(const std::string& replay_path) {
  return std::make_unique<ReplayTransport>(replay_path);
}

std::unique_ptr<HttpTransport> make_recording_transport(std::unique_ptr<HttpTransport> inner,
                                                        const std::string& record_path) {
  return std::make_unique<RecordingTransport>(std::move(inner), record_path);
}

int RetryPolicy::delay_for_attempt(int attempt) const {
  long long delay = base_delay_ms;
  for (int i = 0; i < attempt && delay < max_delay_ms; ++i) {
    delay *= 2;
  }
  return static_cast<int>(std::min<long long>(delay, max_delay_ms));
}

void RetryPolicy::sleep(int ms) const {
  if (sleep_ms) {
    sleep_ms(ms);
  } else {
    std::this_thread::sleep_for(std::chrono::milliseconds(ms));
  }
}

}  // namespace syndiv
