"""Tour of the HTTP API: sessions, model upload, analysis, and what-if.

Boots the real server on a local port in a background thread and walks the
routes with an ordinary HTTP client, exactly as the browser UI does.
"""

import threading
import time

import requests
import uvicorn

import ahpq
from ahpq.server import create_app

PORT = 8457
BASE = f"http://127.0.0.1:{PORT}"

config = uvicorn.Config(create_app(), host="127.0.0.1", port=PORT,
                        log_level="warning")
server = uvicorn.Server(config)
thread = threading.Thread(target=server.run, daemon=True)
thread.start()
while not server.started:
    time.sleep(0.05)

print("GET /api/health ->", requests.get(f"{BASE}/api/health").json())

# Sessions hold one model each, with a revision number for optimistic
# concurrency: mutations against a stale revision are rejected with 409.
session = requests.get(f"{BASE}/api/session").json()["session_id"]
print("new session:", session)

upload = requests.put(
    f"{BASE}/api/session/{session}/model",
    json={"text": ahpq.example_model_text(), "expected_revision": 0}).json()
print("PUT model -> revision", upload["revision"], "errors:",
      upload["report"]["errors"])

stale = requests.put(f"{BASE}/api/session/{session}/model",
                     json={"text": ahpq.example_model_text(),
                           "expected_revision": 0})
print("PUT with stale revision ->", stale.status_code,
      stale.json()["error"]["code"])

result = requests.post(f"{BASE}/api/session/{session}/analyze").json()["result"]
print("POST analyze -> totals",
      {k: f"{v * 100:.1f}%" for k, v in result["alternative_totals"].items()},
      "goal status", result["rows"][0]["consistency"]["status"])

delta = requests.post(
    f"{BASE}/api/session/{session}/whatif",
    json={"node": "Goal/Performance/Escalation", "pair": ["OLD", "NEW"],
          "value": "1/7"}).json()["delta"]
print("POST whatif Escalation -> OLD",
      f"{delta['after']['alternative_totals']['OLD'] * 100:.1f}%",
      "(stored model untouched)")

catalog = requests.get(f"{BASE}/api/catalog",
                       params={"category": "Accessibility"}).json()["entries"]
print("GET catalog?category=Accessibility ->",
      [e["key"] for e in catalog])

server.should_exit = True
thread.join(timeout=5)
print("server stopped")
