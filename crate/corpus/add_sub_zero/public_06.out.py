def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))
def below_zero(operations):
    balance = 0
    for op in operations:
        balance += op
        if balance < 0:
            return True
    return False
