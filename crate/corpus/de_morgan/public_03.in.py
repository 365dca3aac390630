def pick_larger(a, b):
    if a >= b:
        return a
    return b

def needs_review(score, verified):
    flagged = not (score > 80 and verified)
    if flagged:
        return 'review'
    return 'pass'
# probe: needs_review(90, True)
# probe: needs_review(90, False)
# probe: needs_review(10, True)
