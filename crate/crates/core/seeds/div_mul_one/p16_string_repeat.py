def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def stars(n):
    line = '*' * n * 1
    return line
# probe: stars(4)
