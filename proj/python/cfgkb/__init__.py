# Copyright 2026 The cfgkb Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Knowledge-base configuration engine."""

import json

from ._core import CfgkbError, KnowledgeBase, Service, Session


def infer(service, request):
    """Runs one API request given as a dict and returns the response dict."""
    return json.loads(service.handle(json.dumps(request)))


__all__ = ["CfgkbError", "KnowledgeBase", "Service", "Session", "infer"]
