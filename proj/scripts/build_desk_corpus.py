#!/usr/bin/env python3
# Copyright 2026 The rrlangid Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Builds the small multilingual corpus used by the end-to-end tests.

The text is the translated message catalogs (.po msgstr entries) shipped in
a handful of permissively licensed Python packages. Each catalog entry becomes
one line; lines are de-duplicated per language and split 80:20 into train and
test by a stable content hash, one output file per source package.

Usage: build_desk_corpus.py OUTPUT_DIR [--wheels DIR]
"""

import argparse
import collections
import hashlib
import pathlib
import re
import subprocess
import sys
import tempfile
import zipfile

PACKAGES = {
    "django": "django==5.2.18",
    "wagtail": "wagtail==8.0",
    "django_oscar": "django-oscar==4.2.1",
    "django_cms": "django-cms==5.1.3",
    "django_allauth": "django-allauth==65.19.7",
    "sphinx": "sphinx==8.1.3",
}
LANGUAGES = ["ar", "de", "el", "es", "fr", "ja", "ru", "zh"]
# Catalog directory names that map onto the two-letter codes above.
LOCALE_ALIASES = {"zh_Hans": "zh", "zh_CN": "zh", "zh_HANS": "zh"}

ENTRY_RE = re.compile(r'^(msgid|msgstr(?:\[\d+\])?) "(.*)"\n((?:".*"\n)*)', re.M)
PLACEHOLDER_RE = re.compile(
    r"%\([^)]*\)[-#0 +]*\d*(?:\.\d+)?[a-zA-Z]|%[-#0 +]*\d*(?:\.\d+)?[sdifr]"
    r"|\{\{.*?\}\}|\{%.*?%\}|\{[^{}]*\}")


def unescape(s):
    return (s.replace('\\"', '"').replace("\\n", " ").replace("\\t", " ")
            .replace("\\\\", "\\"))


def catalog_strings(text):
    """Yields translated strings from a .po file, skipping the header."""
    blocks = text.split("\n\n")
    for block in blocks:
        if "#, fuzzy" in block:
            continue
        msgid = None
        for m in ENTRY_RE.finditer(block + "\n"):
            value = m.group(2) + "".join(
                line[1:-1] for line in m.group(3).splitlines())
            if m.group(1) == "msgid":
                msgid = value
            elif msgid:
                yield unescape(value)


def clean(s):
    s = PLACEHOLDER_RE.sub(" ", s)
    return " ".join(s.split())


def fetch_wheels(dest):
    subprocess.run([sys.executable, "-m", "pip", "download", "--no-deps",
                    "-q", "-d", str(dest), *PACKAGES.values()], check=True)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("output")
    ap.add_argument("--wheels", help="directory of pre-downloaded wheels")
    args = ap.parse_args()

    with tempfile.TemporaryDirectory() as tmp:
        wheel_dir = pathlib.Path(args.wheels or tmp)
        if not args.wheels:
            fetch_wheels(wheel_dir)
        lines = collections.defaultdict(lambda: collections.defaultdict(list))
        seen = collections.defaultdict(set)
        for pkg in sorted(PACKAGES):
            wheels = sorted(wheel_dir.glob(pkg + "-*.whl"))
            if not wheels:
                sys.exit(f"missing wheel for {pkg}")
            with zipfile.ZipFile(wheels[0]) as zf:
                for name in sorted(zf.namelist()):
                    m = re.search(r"/locale/([^/]+)/LC_MESSAGES/[^/]+\.po$",
                                  name)
                    if not m:
                        continue
                    lang = LOCALE_ALIASES.get(m.group(1), m.group(1))
                    if lang not in LANGUAGES:
                        continue
                    text = zf.read(name).decode("utf-8", "replace")
                    for s in catalog_strings(text):
                        s = clean(s)
                        if len(s) < 2 or s in seen[lang]:
                            continue
                        seen[lang].add(s)
                        lines[lang][pkg].append(s)

    out = pathlib.Path(args.output)
    for lang in LANGUAGES:
        for pkg, entries in lines[lang].items():
            split = {"train": [], "test": []}
            for s in entries:
                h = int(hashlib.sha1(s.encode()).hexdigest(), 16)
                split["test" if h % 5 == 0 else "train"].append(s)
            for part, rows in split.items():
                if not rows:
                    continue
                d = out / part / lang
                d.mkdir(parents=True, exist_ok=True)
                (d / f"{pkg}.txt").write_text("\n".join(rows) + "\n",
                                              encoding="utf-8")
    for part in ("train", "test"):
        for lang in LANGUAGES:
            d = out / part / lang
            size = sum(f.stat().st_size for f in d.glob("*.txt"))
            print(f"{part}\t{lang}\t{size}")


if __name__ == "__main__":
    main()
