# Name server and calculator callbacks under the basic, transactional and
# hot-swap servers.

from layered import NoSuchMethod, Request, start_up

add = lambda name, place: Request("add()place()", [name, place])
where = lambda name: Request("whereIs()", [name])

# basic server: a failing request crashes the whole loop
basic = start_up("basic", "nameServer")
try:
    basic.server_loop([add("BuckinghamPalace", "London"), Request("boojum()", ["x"])])
except NoSuchMethod as err:
    print("basic server crashed:", err)
print("\n".join(basic.log), end="\n\n")

# transaction server: the bad request answers !CRASH! and the state survives
tx = start_up("transactional", "nameServer")
tx.server_loop([add("BuckinghamPalace", "London"), Request("boojum()", ["x"]), where("BuckinghamPalace")])
print("\n".join(tx.log), end="\n\n")

# hot-swap server: turn the name server into a calculator while running
hs = start_up("hotswap", "nameServer", on_log=print)
hs.server_loop([
    add("EiffelTower", "Paris"),
    Request("!HOTSWAP!", ["calculator"]),
    Request("add()", [3]),
    Request("add()", [4]),
    Request("clear", []),
])
print("final state:", hs.state)
