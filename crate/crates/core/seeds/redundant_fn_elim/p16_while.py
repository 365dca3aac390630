def heartbeat(k):
    pass

def halve(n):
    steps = 0
    while n > 1:
        heartbeat(steps)
        n = n // 2
        steps += 1
    return steps
# probe: halve(40)
