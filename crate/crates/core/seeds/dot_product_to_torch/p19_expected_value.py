def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def expected(probs, payoffs):
    ev = 0.0
    for outcome in range(len(probs)):
        ev += probs[outcome] * payoffs[outcome]
    return ev
