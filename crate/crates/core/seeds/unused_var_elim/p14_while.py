def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def digits(n):
    count = 0
    while n > 0:
        last = n % 10
        n = n // 10
        count += 1
    return count
# probe: digits(12345)
