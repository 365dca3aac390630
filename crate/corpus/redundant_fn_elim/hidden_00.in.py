def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def tick():
    pass

def wait(n):
    for _ in range(n):
        tick()
    return n
# probe: wait(3)
