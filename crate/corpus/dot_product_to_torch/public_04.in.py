"""Scoring helpers."""

def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def score(weights, features):
    s = 0.0
    for j in range(len(weights)):
        s += weights[j] * features[j]
    return s + 1
