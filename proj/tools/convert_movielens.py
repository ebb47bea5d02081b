#!/usr/bin/env python3
# Copyright 2026 The Authors.
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
"""Converts a MovieLens-style export into a moviechat catalog (JSON lines).

Reads movies.csv (movieId,title,genres) and, when present, ratings.csv,
tags.csv and links.csv from the input directory. Ratings on the 0.5-5 star
scale are doubled to the catalog's 0-10 scale. Tags become keywords. Cast,
crew, duration and plot are not part of MovieLens and are left empty unless
an --extras file supplies them.

Usage:
  convert_movielens.py ML_DIR -o catalog.jsonl [--min-votes 20] [--limit N]
      [--extras extras.jsonl] [--max-keywords 8]
"""

import argparse
import collections
import csv
import json
import os
import re
import sys
import urllib.parse

_TITLE_YEAR = re.compile(r"^(.*?)\s*\((\d{4})(?:[-–]\d{0,4})?\)\s*$")
_ARTICLE = re.compile(r"^(.*), (The|A|An|Les|La|Le|Il|El|Das|Der|Die)$")
_NO_GENRE = "(no genres listed)"


def split_title(raw):
  """'Matrix, The (1999)' -> ('The Matrix', 1999); year None if absent."""
  m = _TITLE_YEAR.match(raw.strip())
  title, year = (m.group(1), int(m.group(2))) if m else (raw.strip(), None)
  a = _ARTICLE.match(title)
  if a:
    title = f"{a.group(2)} {a.group(1)}"
  return title, year


def read_csv(path):
  with open(path, newline="", encoding="utf-8") as f:
    yield from csv.DictReader(f)


def load_ratings(path):
  sums = collections.defaultdict(float)
  counts = collections.Counter()
  for row in read_csv(path):
    sums[row["movieId"]] += float(row["rating"])
    counts[row["movieId"]] += 1
  return {k: (sums[k] / counts[k], counts[k]) for k in counts}


def load_tags(path, max_keywords):
  tags = collections.defaultdict(collections.Counter)
  for row in read_csv(path):
    tag = " ".join(row["tag"].lower().split())
    if tag:
      tags[row["movieId"]][tag] += 1
  return {
      k: [t for t, _ in sorted(c.items(), key=lambda kv: (-kv[1], kv[0]))
          [:max_keywords]]
      for k, c in tags.items()
  }


def load_links(path):
  return {row["movieId"]: row.get("imdbId", "") for row in read_csv(path)}


def load_extras(path):
  extras = {}
  with open(path, encoding="utf-8") as f:
    for line in f:
      if line.strip():
        record = json.loads(line)
        extras[str(record.pop("movieId"))] = record
  return extras


def convert(args):
  root = args.input
  opt = lambda name: os.path.join(root, name)
  ratings = load_ratings(opt("ratings.csv")) if os.path.exists(
      opt("ratings.csv")) else {}
  tags = load_tags(opt("tags.csv"), args.max_keywords) if os.path.exists(
      opt("tags.csv")) else {}
  links = load_links(opt("links.csv")) if os.path.exists(
      opt("links.csv")) else {}
  extras = load_extras(args.extras) if args.extras else {}

  stats = collections.Counter()
  records = []
  for row in read_csv(opt("movies.csv")):
    stats["seen"] += 1
    movie_id = row["movieId"]
    title, year = split_title(row["title"])
    genres = [g.lower() for g in row["genres"].split("|")
              if g and g != _NO_GENRE]
    extra = extras.get(movie_id, {})
    rating = extra.get("rating")
    votes = extra.get("votes", 0)
    if rating is None and movie_id in ratings:
      mean, votes = ratings[movie_id]
      rating = round(mean * 2, 1)
    if not genres or year is None or rating is None:
      stats["dropped"] += 1
      continue
    if votes < args.min_votes:
      stats["too_few_votes"] += 1
      continue
    imdb = links.get(movie_id, "")
    url = (f"https://www.imdb.com/title/tt{int(imdb):07d}/" if imdb else
           "https://www.imdb.com/find/?q=" + urllib.parse.quote(title))
    records.append({
        "id": f"ml{movie_id}",
        "title": title,
        "genres": genres,
        "keywords": extra.get("keywords", tags.get(movie_id, [])),
        "actors": extra.get("actors", []),
        "directors": extra.get("directors", []),
        "release_year": year,
        "duration": extra.get("duration", 0),
        "rating": rating,
        "votes": votes,
        "plot": extra.get("plot", ""),
        "item_url": url,
        "cover_url": extra.get("cover_url", ""),
    })

  records.sort(key=lambda r: (-r["rating"], -r["votes"], r["id"]))
  if args.limit:
    records = records[:args.limit]
  out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
  with out:
    for r in records:
      out.write(json.dumps(r, ensure_ascii=False) + "\n")
  stats["written"] = len(records)
  print(json.dumps(dict(stats), sort_keys=True), file=sys.stderr)
  return 0


def main(argv=None):
  p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
  p.add_argument("input", help="directory holding movies.csv and friends")
  p.add_argument("-o", "--output", help="catalog file (default: stdout)")
  p.add_argument("--min-votes", type=int, default=0,
                 help="drop movies with fewer ratings")
  p.add_argument("--limit", type=int, default=0,
                 help="keep only the N best-ranked movies")
  p.add_argument("--max-keywords", type=int, default=8)
  p.add_argument("--extras",
                 help="JSON lines keyed by movieId with actors, directors, "
                      "duration, plot, cover_url, rating or votes")
  return convert(p.parse_args(argv))


if __name__ == "__main__":
  sys.exit(main())
