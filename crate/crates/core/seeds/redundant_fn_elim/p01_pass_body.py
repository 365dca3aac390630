def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def log_step(step):
    pass

def run(n):
    total = 0
    for k in range(n):
        log_step(k)
        total += k
    return total
# probe: run(4)
