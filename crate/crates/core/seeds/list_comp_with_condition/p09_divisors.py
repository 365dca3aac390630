def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def divisors(n):
    ds = []
    for k in range(1, n + 1):
        if n % k == 0:
            ds.append(k)
    return ds
# probe: divisors(12)
