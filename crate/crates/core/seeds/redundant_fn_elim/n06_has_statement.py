def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def log(msg):
    print(msg)

def run(x):
    log('running')
    return x + 1
# probe: run(1)
