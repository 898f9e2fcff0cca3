#!/usr/bin/env python3
"""Generate data/affect_lexicon.txt.

Curated lemma -> affect-category associations in the standard word-emotion
association format: one "word<TAB>category<TAB>flag" line per (word,
category) pair, ten lines per word, categories listed alphabetically.

Entries are lemma-level (the affect pipeline lemmatizes before lookup).
A handful of deliberately unannotated words (all flags 0) are included so
the file shape matches the public distribution.
"""

import os

CATEGORIES = [
    "anger", "anticipation", "disgust", "fear", "joy",
    "negative", "positive", "sadness", "surprise", "trust",
]

A, ANT, D, F, J, N, P, S, SUR, T = (
    "anger", "anticipation", "disgust", "fear", "joy",
    "negative", "positive", "sadness", "surprise", "trust",
)

ASSOCIATIONS = {
    # joy / celebration
    "happy": (ANT, J, P, T),
    "happiness": (ANT, J, P),
    "joy": (J, P),
    "joyful": (J, P, T),
    "cheer": (J, P),
    "delight": (J, P),
    "smile": (J, P, SUR, T),
    "laugh": (J, P, SUR),
    "celebrate": (ANT, J, P, SUR),
    "celebration": (ANT, J, P, SUR),
    "triumph": (ANT, J, P, SUR),
    "victory": (ANT, J, P, SUR),
    "win": (ANT, J, P, SUR),
    "prosper": (ANT, J, P, T),
    "prosperity": (ANT, J, P, T),
    "prosperous": (ANT, J, P, T),
    "wealth": (J, P, T),
    "flourish": (ANT, J, P),
    "thrive": (ANT, J, P),
    "succeed": (ANT, J, P, T),
    "success": (ANT, J, P),
    "successful": (ANT, J, P, T),
    "proud": (J, P, T),
    "pride": (J, P),
    "glad": (J, P),
    "wonderful": (J, P, SUR, T),
    "excellent": (J, P, T),
    "brilliant": (J, P),
    "beautiful": (J, P),
    "love": (J, P, T),
    "beloved": (J, P, T),
    "enjoy": (ANT, J, P, T),
    "holiday": (ANT, J, P),
    "festival": (ANT, J, P, SUR),
    "good": (ANT, J, P, SUR, T),
    "great": (J, P, T),
    "best": (J, P, T),
    "better": (P,),
    # trust / institutions
    "trust": (P, T),
    "trustworthy": (P, T),
    "honest": (P, T),
    "honesty": (P, T),
    "integrity": (P, T),
    "loyal": (J, P, T),
    "faith": (ANT, J, P, T),
    "promise": (ANT, P, T),
    "secure": (P, T),
    "security": (P, T),
    "safe": (P, T),
    "safety": (P, T),
    "protect": (P, T),
    "protection": (P, T),
    "guardian": (P, T),
    "police": (F, P, T),
    "doctor": (P, T),
    "nurse": (P, T),
    "teacher": (P, T),
    "friend": (J, P, T),
    "friendly": (J, P, T),
    "ally": (P, T),
    "alliance": (P, T),
    "cooperate": (P, T),
    "cooperation": (P, T),
    "partnership": (P, T),
    "community": (P, T),
    "unity": (P, T),
    "united": (P, T),
    "honour": (P, T),
    "respect": (P, T),
    "reliable": (P, T),
    "fair": (P, T),
    "fairness": (P, T),
    "justice": (P, T),
    "law": (T,),
    "vote": (ANT, P, T),
    "democracy": (P, T),
    "parliament": (T,),
    "pension": (P, T),
    "insurance": (T,),
    "savings": (P, T),
    "care": (P, T),
    "support": (P, T),
    "help": (P, T),
    "heal": (P, T),
    "healthy": (P, T),
    "strong": (P, T),
    "strength": (P, T),
    "stable": (P, T),
    "stability": (P, T),
    "champion": (J, P, T),
    "leader": (P, T),
    "leadership": (P, T),
    "expert": (P, T),
    "skilled": (P, T),
    "professional": (P, T),
    # anticipation / progress
    "plan": (ANT,),
    "prepare": (ANT,),
    "ready": (ANT,),
    "future": (ANT, P),
    "opportunity": (ANT, P),
    "ambition": (ANT, P),
    "ambitious": (ANT, P),
    "begin": (ANT,),
    "start": (ANT,),
    "invest": (ANT, P),
    "investment": (ANT, P),
    "grow": (ANT, P),
    "growth": (ANT, P),
    "build": (ANT, P),
    "rebuild": (ANT, P),
    "renew": (ANT, P),
    "renewal": (ANT, P),
    "reform": (ANT, P),
    "progress": (ANT, J, P),
    "improve": (ANT, P),
    "improvement": (ANT, P),
    "innovation": (ANT, P, SUR),
    "innovative": (ANT, P),
    "modernise": (ANT, P),
    "deliver": (ANT, T),
    "pledge": (ANT, P, T),
    "commit": (ANT, P, T),
    "commitment": (ANT, P, T),
    "aspiration": (ANT, P),
    "hope": (ANT, J, P, SUR, T),
    "hopeful": (ANT, J, P, T),
    "optimism": (ANT, J, P, T),
    "optimistic": (ANT, J, P, T),
    "confident": (ANT, P, T),
    "confidence": (ANT, P, T),
    "boost": (ANT, P),
    "create": (ANT, P),
    "creative": (ANT, J, P),
    "education": (ANT, P, T),
    "learn": (ANT, P),
    "achieve": (ANT, J, P),
    "achievement": (ANT, J, P, T),
    "reward": (ANT, J, P, SUR, T),
    "benefit": (ANT, J, P, T),
    # surprise
    "surprise": (J, P, SUR),
    "sudden": (SUR,),
    "unexpected": (SUR,),
    "astonishing": (P, SUR),
    "remarkable": (P, SUR),
    "breakthrough": (ANT, J, P, SUR),
    "revelation": (SUR,),
    "shock": (F, N, SUR),
    "shocking": (D, F, N, SUR),
    # fear
    "fear": (F, N),
    "afraid": (F, N),
    "terror": (F, N),
    "terrorism": (A, F, N),
    "terrorist": (A, D, F, N),
    "threat": (A, F, N),
    "threaten": (A, F, N),
    "danger": (F, N),
    "dangerous": (F, N),
    "risk": (ANT, F, N),
    "risky": (ANT, F, N),
    "crisis": (F, N),
    "emergency": (F, N, S, SUR),
    "panic": (F, N),
    "anxiety": (ANT, F, N, S),
    "anxious": (ANT, F, N),
    "worry": (ANT, F, N, S),
    "insecure": (F, N),
    "insecurity": (F, N),
    "unsafe": (F, N),
    "alarm": (F, N, SUR),
    "pandemic": (F, N, S),
    "disease": (F, N, S),
    "illness": (F, N, S),
    "infection": (F, N),
    "debt": (F, N, S),
    "unemployment": (A, F, N, S),
    "recession": (A, F, N, S),
    "inflation": (F, N),
    "collapse": (F, N, S),
    "catastrophe": (F, N, S, SUR),
    "disaster": (F, N, S, SUR),
    "storm": (F, N),
    "flood": (F, N, S),
    "warn": (F, N),
    "warning": (F, N),
    # sadness
    "sad": (N, S),
    "sadness": (N, S),
    "grief": (N, S),
    "sorrow": (N, S),
    "despair": (F, N, S),
    "hopeless": (F, N, S),
    "misery": (N, S),
    "suffer": (N, S),
    "pain": (F, N, S),
    "painful": (F, N, S),
    "loss": (N, S),
    "lonely": (N, S),
    "poverty": (A, F, N, S),
    "poor": (N, S),
    "homeless": (F, N, S),
    "homelessness": (F, N, S),
    "hunger": (N, S),
    "hungry": (N,),
    "decline": (N, S),
    "decay": (D, F, N, S),
    "neglect": (A, N, S),
    "abandon": (F, N, S),
    "cry": (N, S),
    "tragedy": (F, N, S),
    "tragic": (F, N, S),
    "broken": (A, F, N, S),
    "failure": (D, F, N, S),
    "fail": (F, N, S),
    "weak": (N,),
    "weakness": (N,),
    "austerity": (A, F, N, S),
    "cut": (N,),
    "wound": (F, N, S),
    "hurt": (A, F, N, S),
    "harm": (F, N),
    "harmful": (F, N),
    "damage": (A, N, S),
    "hardship": (F, N, S),
    "burden": (F, N, S),
    "struggle": (A, F, N, S),
    "waste": (D, N),
    "wasteful": (D, N),
    "lose": (A, F, N, S),
    "defeat": (N, S),
    # anger
    "anger": (A, N),
    "angry": (A, D, N),
    "fury": (A, N),
    "furious": (A, N),
    "rage": (A, N),
    "hate": (A, D, F, N, S),
    "hatred": (A, D, F, N, S),
    "hostile": (A, F, N),
    "hostility": (A, D, F, N),
    "fight": (A, F, N),
    "battle": (A, N),
    "war": (A, F, N, S),
    "warfare": (A, F, N, S),
    "violence": (A, F, N, S),
    "violent": (A, F, N),
    "crime": (A, F, N, S),
    "criminal": (A, D, F, N),
    "attack": (A, F, N, SUR),
    "conflict": (A, F, N, S),
    "betray": (A, D, N, S, SUR),
    "betrayal": (A, D, F, N, S),
    "insult": (A, D, N, SUR),
    "outrage": (A, D, N),
    "protest": (A, N),
    "blame": (A, D, N),
    "injustice": (A, N, S),
    "unfair": (A, N),
    "corrupt": (A, D, N),
    "corruption": (A, D, N),
    "scandal": (A, D, N),
    "abuse": (A, D, F, N, S),
    "cruel": (A, D, F, N, S),
    "cruelty": (A, D, F, N, S),
    "murder": (A, D, F, N, S),
    "kill": (A, F, N, S),
    "destroy": (A, N),
    "enemy": (A, D, F, N),
    "chaos": (A, F, N),
    "divide": (A, N),
    "division": (A, N),
    "divisive": (A, N),
    # disgust
    "disgust": (D, N),
    "disgusting": (D, N),
    "filth": (D, N),
    "filthy": (D, N),
    "rot": (D, N),
    "rotten": (D, N),
    "toxic": (D, F, N),
    "pollution": (D, N),
    "polluted": (D, N),
    "sewage": (D, N),
    "greed": (D, N),
    "greedy": (D, N),
    "dishonest": (A, D, N),
    "lie": (A, D, N, S),
    "mislead": (A, D, N),
    "misleading": (A, D, N),
    "shame": (D, N, S),
    "shameful": (D, N, S),
    "disgrace": (A, D, N, S),
    "disgraceful": (A, D, N),
    "appalling": (D, F, N),
    "dirty": (D, N),
    "squalor": (D, N, S),
    # unannotated filler rows (all flags zero), as in the public file
    "government": (),
    "country": (),
    "people": (),
    "policy": (),
    "year": (),
    "economy": (),
    "nation": (),
    "public": (),
    "household": (),
    "region": (),
}


def main():
    out = os.path.join(os.path.dirname(__file__), "..", "data",
                       "affect_lexicon.txt")
    n_annotated = 0
    with open(out, "w", encoding="utf-8") as fh:
        for word in sorted(ASSOCIATIONS):
            cats = set(ASSOCIATIONS[word])
            assert cats <= set(CATEGORIES), word
            if cats:
                n_annotated += 1
            for cat in CATEGORIES:
                fh.write("%s\t%s\t%d\n" % (word, cat, 1 if cat in cats else 0))
    print("wrote %s (%d words, %d annotated)"
          % (out, len(ASSOCIATIONS), n_annotated))


if __name__ == "__main__":
    main()
