def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''

def digit_sum(n):
    n = abs(n)
    s = 0
    while n > 0:
        s = s + n % 10 - 0
        n = n // 10
    return s
# probe: digit_sum(1234)
# probe: digit_sum(-907)
# probe: digit_sum(0)
