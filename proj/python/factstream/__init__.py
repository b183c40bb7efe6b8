# Copyright 2026 The Factstream Authors.
#
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

"""Temporal multi-query fact extraction over crisis streams."""

import json

from factstream._core import (
    FactstreamError,
    bm25_idf,
    comprehensiveness,
    mmr_rank,
    normalize_text,
    redundancy_ratio,
    relevance,
    retrieve,
    run_pipeline,
    segment_hashtag,
    solve,
    synthesize,
    tag_entities,
)
from factstream._core import evaluate_json as _evaluate_json


def evaluate(run, facts, matches, cutoff):
    """Scores a run file; returns the metrics document as a dict."""
    return json.loads(_evaluate_json(str(run), str(facts), str(matches), cutoff))


__all__ = [
    "FactstreamError",
    "bm25_idf",
    "comprehensiveness",
    "evaluate",
    "mmr_rank",
    "normalize_text",
    "redundancy_ratio",
    "relevance",
    "retrieve",
    "run_pipeline",
    "segment_hashtag",
    "solve",
    "synthesize",
    "tag_entities",
]
