def pick_larger(a, b):
    if a >= b:
        return a
    return b
def needs_review(score, verified):
    flagged = not score > 80 or not verified
    if flagged:
        return 'review'
    return 'pass'
