def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def divisors(n):
    ds = [k for k in range(1, n + 1) if n % k == 0]
    return ds
