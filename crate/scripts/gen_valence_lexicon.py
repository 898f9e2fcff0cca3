#!/usr/bin/env python3
"""Generate data/valence_lexicon.txt.

Curated token->valence ratings in the standard 4-column valence lexicon
format (token, mean, stddev, raw ratings). Means are hand-assigned on the
[-4, 4] scale; the ten per-token ratings are synthesized to reproduce the
stated mean exactly so the file is internally consistent.

Booster, dampener, and negation function words are deliberately absent
(the scorer handles them contextually); "no" is the one negator that is
also a scored token, mirroring the reference lexicon.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))
from reference_valence import BOOSTER_DICT, NEGATE

VALENCES = {
    # strong positive
    "love": 3.2, "loved": 2.9, "loves": 2.7, "excellent": 3.0,
    "outstanding": 3.1, "magnificent": 3.3, "superb": 3.1, "wonderful": 2.9,
    "brilliant": 2.8, "fantastic": 2.9, "amazing": 2.8, "triumph": 2.9,
    "best": 3.2, "perfect": 2.7, "delighted": 2.9, "thrilled": 3.0,
    "joy": 2.8, "joyful": 2.9, "joyous": 3.0, "great": 3.1, "greatest": 3.2,
    "happy": 2.7, "happiness": 2.6, "prosperity": 2.6, "prosperous": 2.8,
    "excellence": 2.7, "victory": 2.9, "win": 2.8, "winner": 2.8,
    "winning": 2.4, "celebrate": 2.7, "celebration": 2.7, "thrive": 2.6,
    "thriving": 2.5, "flourish": 2.4, "peace": 2.5, "peaceful": 2.4,
    # moderate positive
    "good": 1.9, "hope": 1.9, "hopeful": 2.2, "hopes": 1.8, "improve": 1.9,
    "improves": 1.8, "improved": 2.1, "improving": 1.9, "improvement": 2.0,
    "improvements": 1.9, "benefit": 1.9, "benefits": 1.8, "better": 1.9,
    "success": 2.2, "successful": 2.2, "succeed": 2.1, "support": 1.7,
    "supports": 1.6, "supported": 1.5, "supporting": 1.6, "fair": 1.7,
    "fairer": 1.9, "fairness": 2.0, "strong": 1.8, "stronger": 2.0,
    "strength": 1.8, "strengthen": 1.7, "secure": 1.5, "security": 1.4,
    "safe": 1.8, "safer": 1.9, "safety": 1.7, "protect": 1.5,
    "protects": 1.4, "protected": 1.5, "protecting": 1.4, "protection": 1.3,
    "care": 2.0, "caring": 2.2, "opportunity": 1.8, "opportunities": 1.7,
    "freedom": 2.3, "free": 2.3, "proud": 2.1, "pride": 1.9, "dignity": 1.9,
    "justice": 2.0, "trust": 1.6, "trusted": 2.0, "trustworthy": 2.2,
    "honest": 1.9, "honesty": 2.2, "integrity": 2.2, "respect": 1.8,
    "respected": 2.0, "welcome": 1.9, "welcoming": 1.9, "generous": 2.1,
    "kindness": 2.5, "kind": 2.4, "achieve": 1.7, "achieved": 1.8,
    "achievement": 1.9, "achievements": 1.8, "progress": 1.6, "growth": 1.6,
    "grow": 1.4, "growing": 1.3, "renew": 1.3, "renewal": 1.4,
    "vibrant": 1.9, "innovation": 1.5, "innovative": 1.6, "creative": 1.6,
    "boost": 1.5, "stability": 1.3, "stable": 1.2, "unity": 1.7,
    "united": 1.4, "empower": 1.7, "empowered": 1.8, "inspire": 2.1,
    "inspired": 2.2, "inspiring": 2.4, "confidence": 1.8, "confident": 2.0,
    "optimism": 2.1, "optimistic": 2.2, "promising": 1.8, "clean": 1.6,
    "cleaner": 1.5, "healthy": 1.9, "wellbeing": 1.9, "comfort": 1.5,
    "affordable": 1.3, "reward": 1.9, "rewarding": 2.1, "rewards": 1.7,
    "efficient": 1.4, "effective": 1.3, "equality": 1.7, "inclusive": 1.3,
    "cherish": 2.3, "champion": 2.0, "aspiration": 1.4, "aspirations": 1.3,
    "talent": 1.7, "talented": 1.9, "skilled": 1.5, "bright": 1.9,
    "brighter": 2.0, "bold": 1.1, "world-class": 2.0, "first-class": 1.9,
    "heart": 1.6, "kiss": 1.8, "yeah": 1.2, "right": 0.9, "rights": 1.0,
    # mild positive
    "agree": 1.1, "agreed": 1.2, "agreement": 1.0, "share": 1.2,
    "invest": 1.2, "investment": 1.2, "rebuild": 1.0, "reform": 0.9,
    "modern": 0.9, "deliver": 1.1, "delivered": 1.2, "promise": 1.3,
    "ambitious": 1.5, "ambition": 1.2, "committed": 1.2, "commitment": 1.3,
    "skills": 1.1, "create": 1.1, "transform": 1.0, "equal": 1.1,
    "gain": 1.4, "gains": 1.3, "succeeded": 2.0, "positive": 2.1,
    "restore": 1.1,
    # strong negative
    "hate": -2.7, "hatred": -3.1, "catastrophe": -3.0, "catastrophic": -3.2,
    "disaster": -3.1, "disastrous": -3.0, "devastating": -3.0,
    "devastated": -2.9, "horrific": -3.1, "horrible": -2.5, "terror": -3.1,
    "terrorism": -3.4, "terrorist": -3.1, "war": -2.9, "wars": -2.7,
    "warfare": -2.8, "tragedy": -2.8, "tragic": -2.6, "cruel": -2.6,
    "cruelty": -2.9, "abuse": -2.8, "abused": -2.6, "violence": -3.1,
    "violent": -2.9, "murder": -3.4, "kill": -3.1, "killed": -3.0,
    "death": -2.9, "die": -2.9, "poverty": -2.6, "destitute": -2.7,
    "misery": -2.7, "despair": -2.7, "hopeless": -2.6, "ruin": -2.6,
    "ruined": -2.8, "worst": -3.1, "evil": -3.4, "corrupt": -2.9,
    "corruption": -2.9, "chaos": -2.4, "chaotic": -2.3, "disgust": -2.9,
    "disgusting": -2.7, "disgusted": -2.6, "appalling": -2.6,
    "appalled": -2.4, "starve": -2.8, "starving": -2.7, "betray": -2.6,
    "betrayal": -2.7, "betrayed": -2.6, "furious": -2.7,
    # moderate negative
    "bad": -2.5, "worse": -2.1, "terrible": -2.1, "fail": -2.3,
    "failed": -2.3, "failing": -2.2, "failure": -2.4, "failures": -2.3,
    "fails": -2.2, "crime": -2.5, "crimes": -2.4, "criminal": -2.4,
    "criminals": -2.3, "fear": -2.2, "fears": -1.9, "feared": -2.0,
    "fearful": -2.3, "afraid": -2.2, "anger": -2.3, "angry": -2.3,
    "threat": -1.9, "threats": -1.8, "threaten": -1.9, "threatened": -1.8,
    "threatening": -2.0, "danger": -2.4, "dangerous": -2.2, "harm": -2.5,
    "harmful": -2.3, "harmed": -2.2, "hurt": -2.3, "hurting": -2.2,
    "damage": -1.9, "damaged": -2.0, "damaging": -2.1, "debt": -1.8,
    "unemployment": -2.0, "unemployed": -1.9, "insecure": -1.8,
    "insecurity": -1.8, "unfair": -2.0, "unfairness": -2.1,
    "injustice": -2.3, "inequality": -1.9, "neglect": -1.9,
    "neglected": -2.0, "broken": -1.9, "crumbling": -1.9, "decay": -1.8,
    "weak": -1.9, "weaker": -1.8, "weakness": -1.9, "poor": -2.1,
    "poorer": -1.9, "struggling": -1.8, "struggle": -1.6, "struggles": -1.6,
    "suffer": -2.1, "suffering": -2.3, "suffered": -2.0, "pain": -2.3,
    "painful": -2.3, "sad": -2.1, "sadness": -2.2, "sadly": -1.9,
    "grim": -1.9, "bleak": -1.9, "anxious": -1.8, "anxiety": -2.0,
    "outrage": -2.5, "outrageous": -2.3, "dread": -2.4, "panic": -2.3,
    "alarming": -1.9, "toxic": -2.2, "pollution": -1.9, "polluted": -2.0,
    "disease": -2.3, "sick": -1.9, "illness": -1.9, "homeless": -2.2,
    "homelessness": -2.3, "hunger": -2.1, "hungry": -1.7, "crisis": -2.1,
    "scandal": -2.2, "collapse": -2.2, "shame": -2.1, "shameful": -2.3,
    "disgrace": -2.4, "disgraceful": -2.5, "waste": -1.8, "wasted": -1.9,
    "wasteful": -1.9, "lying": -2.0, "dishonest": -2.2, "mislead": -1.8,
    "misleading": -1.9, "lie": -1.8, "lies": -1.7, "hostile": -2.1,
    "hostility": -2.2, "conflict": -1.8, "conflicts": -1.7, "bomb": -2.4,
    "ass": -2.5, "divisive": -1.8, "austerity": -1.5, "stagnation": -1.5,
    "stagnant": -1.4, "blame": -1.4, "blamed": -1.5, "lose": -1.7,
    "losing": -1.8, "burden": -1.5, "burdens": -1.4,
    # mild negative
    "no": -1.2, "problem": -1.1, "problems": -1.2, "difficult": -1.2,
    "difficulty": -1.3, "difficulties": -1.3, "doubt": -1.4, "doubts": -1.3,
    "doubtful": -1.4, "uncertain": -1.2, "uncertainty": -1.3, "slow": -0.8,
    "slower": -0.9, "delay": -0.9, "delays": -1.0, "delayed": -1.1,
    "mistake": -1.5, "mistakes": -1.6, "error": -1.4, "errors": -1.4,
    "wrong": -1.6, "wrongly": -1.5, "concern": -0.8, "concerns": -0.8,
    "concerned": -0.9, "worry": -1.6, "worried": -1.6, "worrying": -1.7,
    "worries": -1.5, "risk": -1.1, "risks": -1.0, "risky": -1.3,
    "cut": -1.1, "cuts": -1.1, "deficit": -1.4, "lost": -1.3, "loss": -1.3,
    "losses": -1.4, "decline": -1.4, "declining": -1.5, "divided": -1.4,
    "division": -1.2, "costly": -1.2, "expensive": -0.9, "shortage": -1.5,
    "shortages": -1.4, "alarm": -1.4, "declined": -1.4, "negative": -1.9,
}


def synth_ratings(mean):
    target = round(mean * 10)
    base = round(mean)
    ratings = [base] * 10
    diff = target - sum(ratings)
    i = 0
    step = 1 if diff > 0 else -1
    while diff != 0:
        cand = ratings[i] + step
        if -4 <= cand <= 4:
            ratings[i] = cand
            diff -= step
        i = (i + 1) % 10
    assert sum(ratings) == target
    return ratings


def pop_std(values):
    m = sum(values) / len(values)
    return (sum((v - m) ** 2 for v in values) / len(values)) ** 0.5


def main():
    for word in VALENCES:
        assert word == word.lower(), word
        assert -4.0 <= VALENCES[word] <= 4.0, word
        if word != "no":
            assert word not in NEGATE, word
            assert word not in BOOSTER_DICT, word

    out = os.path.join(os.path.dirname(__file__), "..", "data",
                       "valence_lexicon.txt")
    with open(out, "w", encoding="utf-8") as fh:
        fh.write("# token<TAB>mean valence<TAB>stddev<TAB>raw ratings\n")
        fh.write("# scale: -4 (extremely negative) .. +4 (extremely positive)\n")
        for word in sorted(VALENCES):
            mean = VALENCES[word]
            ratings = synth_ratings(mean)
            std = pop_std(ratings)
            fh.write("%s\t%.1f\t%.5f\t%s\n" % (word, mean, std, ratings))
    print("wrote %s (%d entries)" % (out, len(VALENCES)))


if __name__ == "__main__":
    main()
