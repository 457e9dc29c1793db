"""
Integration tests for the HTTP service.
"""

from fastapi.testclient import TestClient

from main import app


class TestApi:
    """Endpoints end to end, domain errors as 400 bodies."""

    def setup_method(self):
        """Setup before each test."""
        self.client = TestClient(app)

    def test_health(self):
        response = self.client.get("/health")
        assert response.status_code == 200
        data = response.json()
        assert data["status"] == "healthy"
        assert "binary" in [m["name"] for m in data["models"]]
        assert "fib" in [e["name"] for e in data["ends"]]

    def test_generate(self):
        response = self.client.post("/metafib/generate", json={"r": "pow2", "K": 5})
        assert response.status_code == 200
        data = response.json()
        assert data["values"] == [1, 2, 5, 13, 33]
        assert data["r"] == [1, 2, 4, 8, 16]
        assert data["spec"]["kind"] == "pow2"

    def test_generate_rejects_bad_k(self):
        response = self.client.post("/metafib/generate", json={"r": "pow2", "K": 0})
        assert response.status_code == 422
        response = self.client.post("/metafib/generate", json={"r": "pow2", "K": 10 ** 6})
        assert response.status_code == 422

    def test_generate_unknown_rspec(self):
        response = self.client.post("/metafib/generate", json={"r": "cubic", "K": 3})
        assert response.status_code == 400
        assert response.json()["error"] == "invalid_rspec"

    def test_infer(self):
        response = self.client.post("/metafib/infer", json={"values": [1, 2, 5, 13]})
        assert response.status_code == 200
        assert response.json()["r"] == [1, 2, 4, 8]

    def test_infer_not_metafib(self):
        response = self.client.post("/metafib/infer", json={"values": [2, 3, 4]})
        assert response.status_code == 400
        data = response.json()
        assert data["error"] == "not_metafib"
        assert (data["k"], data["undershoot"], data["overshoot"]) == (3, 3, 5)

    def test_gamma(self):
        response = self.client.get("/metafib/gamma/3", params={"tol": 1e-12})
        assert response.status_code == 200
        assert abs(response.json()["gamma"] - 1.8392867552) < 1e-9

    def test_chain(self):
        response = self.client.post("/twd/chain", json={"model": "binary", "end": "fib", "K": 8})
        assert response.status_code == 200
        data = response.json()
        assert data["n"][:8] == [1, 1, 2, 3, 5, 8, 13, 21]
        assert data["k"] == list(range(0, 9))
        assert data["r"][-1] == 2

    def test_chain_z2(self):
        response = self.client.post("/twd/chain", json={"model": "z2:G:1", "end": "periodic:1", "K": 3})
        assert response.status_code == 200
        assert response.json()["nonrecurrent_at"] == 1

    def test_chain_non_positive_shift(self):
        response = self.client.post("/twd/chain", json={"model": "z2:F:-1", "end": "periodic:0", "K": 3})
        assert response.status_code == 400
        assert response.json()["error"] == "non_positive_shift"

    def test_validate(self):
        response = self.client.post("/twd/validate", json={"model": "binary", "depth": 6})
        assert response.status_code == 200
        data = response.json()
        assert data["clean"] is True
        assert data["vertices_checked"] == 69

    def test_validate_unknown_model(self):
        response = self.client.post("/twd/validate", json={"model": "octonions"})
        assert response.status_code == 400
        assert response.json()["error"] == "model_format_error"

    def test_yoccoz_build(self):
        response = self.client.post("/yoccoz/build", json={"classes": "1/3,2/3", "depth": 3})
        assert response.status_code == 200
        data = response.json()
        assert [data["counts"][str(d)] for d in range(-3, 4)] == [1, 1, 1, 1, 2, 3, 5]
        assert data["critical_nest"] == ["P_0", "P_1^0", "P_2^0", "P_3^0"]
        assert data["puzzle"]["window"] == [-3, 3]

    def test_yoccoz_bad_seed(self):
        response = self.client.post("/yoccoz/build", json={"classes": "1/5,2/5", "depth": 2})
        assert response.status_code == 400
        assert response.json()["error"] == "precondition_failed"
