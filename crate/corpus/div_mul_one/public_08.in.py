def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def over_budget(costs, budget):
    spent = 0
    for c in costs:
        spent += c
        if spent * 1 > budget:
            return True
    return False
# probe: over_budget([5, 5, 5], 12)
# probe: over_budget([1], 12)
