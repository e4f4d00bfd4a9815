#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace syndiv {

using HeaderList = std::vector<std::pair<std::string, std::string>>;

struct HttpResponse {
  int status = 0;
  std::string body;
  std::map<std::string, std::string> headers;
};

/// Transport-level outcome. `ok == false` means the request never produced
/// an HTTP response (connect failure, timeout); `error` says why.
struct HttpResult {
  bool ok = false;
  std::string error;
  HttpResponse response;
};

class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  virtual HttpResult get(const std::string& url, const HeaderList& headers) = 0;
  virtual HttpResult post_json(const std::string& url, const std::string& body,
                               const HeaderList& headers) = 0;
};

/// Live transport over cpp-httplib (HTTPS when built with OpenSSL).
std::unique_ptr<HttpTransport> make_httplib_transport(int timeout_seconds = 120);

/// Digest keying replay entries: FNV-1a over method, URL and body.
std::string request_digest(const std::string& method, const std::string& url,
                           const std::string& body);

/// Serves responses recorded in a JSONL replay file; never touches the
/// network. A request with no recorded entry fails as a transport error.
std::unique_ptr<HttpTransport> make_replay_transport(const std::string& replay_path);

/// Wraps another transport and appends request/response pairs to a JSONL
/// record file, keyed by request digest.
std::unique_ptr<HttpTransport> make_recording_transport(std::unique_ptr<HttpTransport> inner,
                                                        const std::string& record_path);

/// Exponential backoff with a deadline on attempts. The sleeper is
/// injectable so tests can run the policy without waiting.
struct RetryPolicy {
  int max_retries = 5;
  int base_delay_ms = 500;
  int max_delay_ms = 60000;
  std::function<void(int)> sleep_ms;  // defaults to std::this_thread::sleep_for

  int delay_for_attempt(int attempt) const;
  void sleep(int ms) const;
};

}  // namespace syndiv
