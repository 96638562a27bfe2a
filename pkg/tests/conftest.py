from __future__ import annotations

import pytest

from depswap.conllu import parse_conllu_text
from depswap.preprocess import PreprocessConfig, preprocess_pipeline

# Gold parse of the running English example, raw: capitalized, final punct,
# copula arc not yet lifted.  The outer subject attaches via nsubj:outer.
EN_FIXTURE = """\
# sent_id = en-fixture-1
1\tThe\tthe\tDET\t_\t_\t2\tdet\t_\t_
2\tfact\tfact\tNOUN\t_\t_\t10\tnsubj:outer\t_\t_
3\tis\tbe\tAUX\t_\t_\t10\tcop\t_\t_
4\tthat\tthat\tSCONJ\t_\t_\t10\tmark\t_\t_
5\tthe\tthe\tDET\t_\t_\t6\tdet\t_\t_
6\tseason\tseason\tNOUN\t_\t_\t10\tnsubj\t_\t_
7\tof\tof\tADP\t_\t_\t8\tcase\t_\t_
8\tstrawberries\tstrawberry\tNOUN\t_\t_\t6\tnmod\t_\t_
9\tis\tbe\tAUX\t_\t_\t10\taux\t_\t_
10\trunning\trun\tVERB\t_\t_\t0\troot\t_\t_
11\tfrom\tfrom\tADP\t_\t_\t12\tcase\t_\t_
12\tJuly\tJuly\tPROPN\t_\t_\t10\tobl\t_\t_
13\tto\tto\tADP\t_\t_\t14\tcase\t_\t_
14\tAugust\tAugust\tPROPN\t_\t_\t10\tobl\t_\t_
15\t.\t.\tPUNCT\t_\t_\t10\tpunct\t_\t_

"""

# Gold parse of the running Japanese example (romanized forms), raw:
# copula "dearu" still attached via aux.
JA_FIXTURE = """\
# sent_id = ja-fixture-1
1\tIchigo\tichigo\tNOUN\t_\t_\t3\tnmod\t_\t_
2\tno\tno\tADP\t_\t_\t1\tcase\t_\t_
3\tkisetsu\tkisetsu\tNOUN\t_\t_\t9\tnsubj\t_\t_
4\tga\tga\tADP\t_\t_\t3\tcase\t_\t_
5\tshichigatsu\tshichigatsu\tNOUN\t_\t_\t9\tobl\t_\t_
6\tkara\tkara\tADP\t_\t_\t5\tcase\t_\t_
7\thachigatsu\thachigatsu\tNOUN\t_\t_\t9\tobl\t_\t_
8\tmade\tmade\tADP\t_\t_\t7\tcase\t_\t_
9\ttsudui\ttsuduku\tVERB\t_\t_\t11\tacl\t_\t_
10\tteiru\tteiru\tAUX\t_\t_\t9\taux\t_\t_
11\tkoto\tkoto\tNOUN\t_\t_\t13\tnsubj\t_\t_
12\twa\twa\tADP\t_\t_\t11\tcase\t_\t_
13\tjijitsu\tjijitsu\tNOUN\t_\t_\t0\troot\t_\t_
14\tdearu\tdearu\tAUX\t_\t_\t13\taux\t_\t_
15\t。\t。\tPUNCT\t_\t_\t13\tpunct\t_\t_

"""

COORD_FIXTURES = """\
# sent_id = coord-1
1\tWe\twe\tPRON\t_\t_\t3\tnsubj\t_\t_
2\tare\tbe\tAUX\t_\t_\t3\tcop\t_\t_
3\tstudents\tstudent\tNOUN\t_\t_\t0\troot\t_\t_
4\tand\tand\tCCONJ\t_\t_\t5\tcc\t_\t_
5\tteachers\tteacher\tNOUN\t_\t_\t3\tconj\t_\t_
6\t.\t.\tPUNCT\t_\t_\t3\tpunct\t_\t_

# sent_id = coord-2
1\tWe\twe\tPRON\t_\t_\t2\tnsubj\t_\t_
2\tlike\tlike\tVERB\t_\t_\t0\troot\t_\t_
3\tcats\tcat\tNOUN\t_\t_\t2\tobj\t_\t_
4\tand\tand\tCCONJ\t_\t_\t5\tcc\t_\t_
5\tlove\tlove\tVERB\t_\t_\t2\tconj\t_\t_
6\tdogs\tdog\tNOUN\t_\t_\t5\tobj\t_\t_
7\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_

# sent_id = coord-3
1\tWe\twe\tPRON\t_\t_\t2\tnsubj\t_\t_
2\tsing\tsing\tVERB\t_\t_\t0\troot\t_\t_
3\tand\tand\tCCONJ\t_\t_\t4\tcc\t_\t_
4\tdance\tdance\tVERB\t_\t_\t2\tconj\t_\t_
5\tin\tin\tADP\t_\t_\t7\tcase\t_\t_
6\tthe\tthe\tDET\t_\t_\t7\tdet\t_\t_
7\tpark\tpark\tNOUN\t_\t_\t4\tobl\t_\t_
8\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_

# sent_id = coord-4
1\tWe\twe\tPRON\t_\t_\t2\tnsubj\t_\t_
2\tdance\tdance\tVERB\t_\t_\t0\troot\t_\t_
3\tand\tand\tCCONJ\t_\t_\t4\tcc\t_\t_
4\tplay\tplay\tVERB\t_\t_\t2\tconj\t_\t_
5\ttag\ttag\tNOUN\t_\t_\t4\tobj\t_\t_
6\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_

"""


def prepared(text: str, language: str):
    """Parse raw fixture text and run the standard preprocessing for the
    language (Latin filtering off: the Japanese fixtures are romanized)."""
    config = PreprocessConfig.for_language(language)
    config.drop_latin_sentences = False
    out = []
    for sent in parse_conllu_text(text):
        done = preprocess_pipeline(sent, config)
        if done is not None:
            out.append(done)
    return out


@pytest.fixture
def en_sentence():
    (sent,) = prepared(EN_FIXTURE, "en")
    return sent


@pytest.fixture
def ja_sentence():
    (sent,) = prepared(JA_FIXTURE, "ja")
    return sent


@pytest.fixture
def coord_sentences():
    return prepared(COORD_FIXTURES, "en")
