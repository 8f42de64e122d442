import os
import tempfile

# isolate the structure-polynomial cache per test session
_cache = tempfile.mkdtemp(prefix="wittgrass-test-cache-")
os.environ.setdefault("WITTGRASS_CACHE_DIR", _cache)
