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
        if spent > budget:
            return True
    return False
