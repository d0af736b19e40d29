"""Generate include/termforge/lexicon.hpp: the default English word list
used by the crawler's three-words-in-a-row sentence filter.

Contents: function words, irregular verb forms, a broad base-form
vocabulary (shared with the stemmer fixture generator), and correctly
inflected forms for the highest-frequency verbs and nouns.
"""

import os
import re

from gen_porter_fixture import ROOTS

FUNCTION_WORDS = """
the a an and or but if then else when while because so that which who whom
whose what where why how this these those there here is are was were be been
being am do does did done have has had having will would shall should can
could may might must not no nor only very too also just even still yet again
once of to in on at by for with about against between into through during
before after above below from up down out off over under further than as
until unless although though since whether both each few more most other
some such all any every either neither one two three four five six seven
eight nine ten first second third next last many much own same it its he
him his she her hers they them their theirs we us our ours you your yours
i me my mine myself yourself himself herself itself ourselves themselves
dont doesnt didnt wont wouldnt cant couldnt shouldnt isnt arent wasnt
werent hasnt havent hadnt im ive ill id youre youve youll youd hes shes
theyre theyve theyll thats whats lets
""".split()

IRREGULAR_FORMS = """
went gone goes going said says saying got gotten gets getting made makes
making knew known knows knowing took taken takes taking saw seen sees
seeing came comes coming thought thinks thinking looked looks looking
wanted wants wanting gave given gives giving used uses using found finds
finding told tells telling asked asks asking worked works working seemed
seems seeming felt feels feeling tried tries trying left leaves leaving
called calls calling needed needs needing became becomes becoming put puts
putting meant means meaning kept keeps keeping let lets letting begun began
begins beginning showed shown shows showing heard hears hearing played
plays playing ran run runs running moved moves moving lived lives living
believed believes believing brought brings bringing happened happens
happening wrote written writes writing sat sits sitting stood stands
standing lost loses losing paid pays paying met meets meeting included
includes including continued continues continuing set sets setting learned
learns learning led leads leading understood understands understanding
spoke spoken speaks speaking read reads reading grew grown grows growing
opened opens opening walked walks walking won wins winning taught teaches
teaching offered offers offering remembered remembers remembering
considered considers considering appeared appears appearing bought buys
buying served serves serving died dies dying sent sends sending built
builds building stayed stays staying fell fallen falls falling reached
reaches reaching killed kills killing remained remains remaining suggested
suggests suggesting raised raises raising passed passes passing sold sells
selling required requires requiring reported reports reporting decided
decides deciding pulled pulls pulling broke broken breaks breaking spent
spends spending cut cuts cutting rose risen rises rising drove driven
drives driving flew flown flies flying wore worn wears wearing chose
chosen chooses choosing ate eaten eats eating drank drunk drinks drinking
sang sung sings singing swam swims swimming threw thrown throws throwing
caught catches catching fought fights fighting sought seeks seeking slept
sleeps sleeping held holds holding drew drawn draws drawing struck strikes
striking laid lays laying lain lies lying
cats dogs days years ways things people children men women times hands
eyes words places parts houses countries problems groups cases weeks
months questions students numbers nights rooms areas stories families
studies books waters feet teeth mice lives
""".split()

VOWELS = set("aeiou")


def inflect_verb(v):
    forms = {v}
    if v.endswith("e") and not v.endswith(("ee", "ye", "oe")):
        forms.add(v + "s")
        forms.add(v[:-1] + "ed")
        forms.add(v[:-1] + "ing")
    elif v.endswith("y") and len(v) > 2 and v[-2] not in VOWELS:
        forms.add(v[:-1] + "ies")
        forms.add(v[:-1] + "ied")
        forms.add(v + "ing")
    elif re.search(r"(ch|sh|ss|x|z|o)$", v):
        forms.add(v + "es")
        forms.add(v + "ed" if not v.endswith("o") else v + "ed")
        forms.add(v + "ing")
    else:
        forms.add(v + "s")
        last3 = v[-3:]
        if (
            len(v) >= 3
            and last3[0] not in VOWELS
            and last3[1] in VOWELS
            and last3[2] not in VOWELS
            and last3[2] not in "wxy"
            and len(v) <= 5
        ):
            forms.add(v + last3[2] + "ed")
            forms.add(v + last3[2] + "ing")
        else:
            forms.add(v + "ed")
            forms.add(v + "ing")
    return forms


def pluralize(n):
    if n.endswith("y") and len(n) > 2 and n[-2] not in VOWELS:
        return n[:-1] + "ies"
    if re.search(r"(ch|sh|ss|s|x|z)$", n):
        return n + "es"
    return n + "s"


COMMON_VERBS = """
help start stop talk turn follow change happen provide include allow add
expect cause treat affect cover improve reduce increase develop report
describe support create produce explain carry result occur lead involve
suffer notice spread prevent protect avoid remove reach remain depend
contain visit share receive accept check wash touch wait watch wish worry
""".split()

COMMON_NOUNS = """
person child woman man family friend doctor patient disease condition
treatment symptom skin body hand face head heart blood cell health care
pain effect cause drug medicine therapy test result problem question
answer reason change life world school work home food water air light
color part area side place point line form type kind group number week
month year day time hour name word page site list order level state case
system program study research report article information course house
power money job company service market country city street road door room
wall floor table chair paper book story idea fact example

""".split()


def main():
    words = set()
    words.update(FUNCTION_WORDS)
    words.update(IRREGULAR_FORMS)
    words.update(ROOTS)
    for v in COMMON_VERBS:
        words.update(inflect_verb(v))
    for n in COMMON_NOUNS:
        words.add(n)
        words.add(pluralize(n))
    words = sorted(w for w in words if w.isalpha() and w.isascii())

    required = ["the", "cat", "sat", "is", "a", "skin", "condition"]
    forbidden = ["le", "noir", "zxq", "qwv", "brzt"]
    missing = [w for w in required if w not in words]
    present = [w for w in forbidden if w in words]
    if missing or present:
        raise SystemExit(f"lexicon check failed: missing={missing} present={present}")

    lines = []
    cur, n = [], 0
    for w in words:
        if n + len(w) + (1 if cur else 0) > 72:
            lines.append(" ".join(cur))
            cur, n = [], 0
        cur.append(w)
        n += len(w) + (1 if n else 0)
    if cur:
        lines.append(" ".join(cur))
    body = "\n".join(lines)

    header = f"""#ifndef TERMFORGE_LEXICON_HPP
#define TERMFORGE_LEXICON_HPP

#include <sstream>
#include <string>
#include <unordered_set>

namespace termforge {{

// Default English lexicon for the language filter: high-frequency function
// words, common verbs with their inflected forms, and everyday nouns and
// adjectives. The filter only needs to recognize runs of ordinary words,
// so coverage of rare vocabulary is deliberately not a goal.
inline const char* kDefaultLexicon = R"lex(
{body}
)lex";

inline std::unordered_set<std::string> default_lexicon() {{
    std::unordered_set<std::string> out;
    std::istringstream in(kDefaultLexicon);
    std::string word;
    while (in >> word) out.insert(word);
    return out;
}}

}}  // namespace termforge

#endif
"""
    out = os.path.join(
        os.path.dirname(__file__), "..", "include", "termforge", "lexicon.hpp"
    )
    with open(out, "w") as fh:
        fh.write(header)
    print(f"wrote {len(words)} lexicon words")


if __name__ == "__main__":
    main()
